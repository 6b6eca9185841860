#include <algorithm>
#include <vector>

#include "doctest.h"
#include "ntotal/ring.hpp"
#include "ntotal/theorems.hpp"

using ntotal::RingSpec;
using ntotal::Verdict;
using ntotal::VerificationReport;

namespace {

const std::vector<std::string> kCheckOrder = {
    "complete-blocks",      "bipartite-blocks",     "reg-connectivity",
    "reg-diam-girth-range", "zero-one-path",        "reg-connected-lifts",
    "zd-generation",        "diam-generator-count", "reg-diam-lower-bound",
    "product-odd",          "product-even",
};

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("run_checks emits every check once in a fixed order") {
  const auto reports = ntotal::run_checks(ntotal::parse_ring("Z6"), 2, {});
  REQUIRE(reports.size() == kCheckOrder.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].check == kCheckOrder[i]);
    CHECK(reports[i].ring == "Z6");
    CHECK(reports[i].n == 2);
  }
}

TEST_CASE("complete block decomposition check") {
  const auto z8 = ntotal::parse_ring("Z8");
  for (unsigned n = 1; n <= 4; ++n) {
    const auto report = ntotal::check_complete_block_decomposition(z8, n);
    CHECK(report.verdict == Verdict::Pass);
    CHECK(report.predicted == "2*K_4");
    CHECK(report.observed == report.predicted);
  }

  const auto z4 = ntotal::check_complete_block_decomposition(
      ntotal::parse_ring("Z4"), 1);
  CHECK(z4.verdict == Verdict::Pass);
  CHECK(z4.predicted == "2*K_2");

  // 2 is a unit mod 9, so the complete form does not apply
  const auto z9 = ntotal::check_complete_block_decomposition(
      ntotal::parse_ring("Z9"), 1);
  CHECK(z9.verdict == Verdict::NotApplicable);
  CHECK(z9.hypothesis == "2 is not a zero-divisor");

  const auto z6 = ntotal::check_complete_block_decomposition(
      ntotal::parse_ring("Z6"), 1);
  CHECK(z6.verdict == Verdict::NotApplicable);
  CHECK(z6.hypothesis == "Z(R) is not an ideal");
}

TEST_CASE("bipartite block decomposition check") {
  // d = 2 even: K_3 plus one K_{3,3}
  const auto z9n1 = ntotal::check_bipartite_block_decomposition(
      ntotal::parse_ring("Z9"), 1);
  CHECK(z9n1.verdict == Verdict::Pass);
  CHECK(z9n1.predicted == "K_3 + K_{3,3}");

  // d = 1 odd: complete block on Z(R) plus isolated regulars
  const auto z9n2 = ntotal::check_bipartite_block_decomposition(
      ntotal::parse_ring("Z9"), 2);
  CHECK(z9n2.verdict == Verdict::Pass);
  CHECK(z9n2.predicted == "K_3 + 6*K_1");
  CHECK(z9n2.observed.find("Reg totally disconnected: yes") !=
        std::string::npos);

  const auto z169 = ntotal::check_bipartite_block_decomposition(
      ntotal::parse_ring("Z169"), 3);
  CHECK(z169.verdict == Verdict::Pass);
  CHECK(z169.predicted == "K_13 + 2*K_{39,39}");

  const auto z8 = ntotal::check_bipartite_block_decomposition(
      ntotal::parse_ring("Z8"), 1);
  CHECK(z8.verdict == Verdict::NotApplicable);
  CHECK(z8.hypothesis == "2 is a zero-divisor");
}

TEST_CASE("regular connectivity check") {
  // gcd(2, 4) = 2 = (beta-1)/2, so the regulars form one K_{10,10}
  const auto z25 = ntotal::check_regular_connectivity(ntotal::parse_ring("Z25"), 2);
  CHECK(z25.verdict == Verdict::Pass);
  CHECK(z25.predicted == "connected, K_{10,10}");
  CHECK(z25.observed == z25.predicted);

  // gcd(3, 168) = 3 != 84: disconnected regulars
  const auto z169 = ntotal::check_regular_connectivity(
      ntotal::parse_ring("Z169"), 3);
  CHECK(z169.verdict == Verdict::Pass);
  CHECK(z169.predicted == "not connected");

  const auto z9 = ntotal::check_regular_connectivity(ntotal::parse_ring("Z9"), 2);
  CHECK(z9.verdict == Verdict::Pass);
  CHECK(z9.predicted == "not connected");
}

TEST_CASE("regular diameter and girth stay in the allowed ranges") {
  for (const auto* text : {"Z2", "Z8", "Z9", "Z25", "Z27", "Z169"}) {
    CAPTURE(text);
    const auto ring = ntotal::parse_ring(text);
    for (unsigned n = 1; n <= 4; ++n) {
      const auto report = ntotal::check_regular_diameter_girth_range(ring, n);
      CHECK(report.verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("zero-one path criterion") {
  const auto z6 = ntotal::check_zero_one_path_criterion(ntotal::parse_ring("Z6"), 2);
  CHECK(z6.verdict == Verdict::Pass);
  CHECK(z6.observed == "connected=yes, d(0,1)=2");

  const auto z21 = ntotal::check_zero_one_path_criterion(
      ntotal::parse_ring("Z21"), 2);
  CHECK(z21.verdict == Verdict::Pass);
  CHECK(z21.observed == "connected=no, d(0,1)=inf");

  const auto z8 = ntotal::check_zero_one_path_criterion(ntotal::parse_ring("Z8"), 2);
  CHECK(z8.verdict == Verdict::NotApplicable);
}

TEST_CASE("connectivity lifting from the regulars") {
  // odd exponent: no root needed
  const auto z6n3 = ntotal::check_regular_connectivity_lifts(
      ntotal::parse_ring("Z6"), 3);
  CHECK(z6n3.verdict == Verdict::Pass);

  // even exponent, no root of -1: hypothesis missing, and the full graph
  // being connected anyway is worth recording
  const auto z14 = ntotal::check_regular_connectivity_lifts(
      ntotal::parse_ring("Z14"), 2);
  CHECK(z14.verdict == Verdict::NotApplicable);
  CHECK(z14.hypothesis == "no u with u^n = -1");
  CHECK(z14.note ==
        "n-T(R) is connected although no n-th root of -1 exists");

  // even exponent with a root: 5^2 = 25 = -1 mod 26
  const auto z26 = ntotal::check_regular_connectivity_lifts(
      ntotal::parse_ring("Z26"), 2);
  CHECK(z26.verdict == Verdict::Pass);
}

TEST_CASE("zero-divisor generation criterion") {
  // odd exponent: biconditional
  const auto z6 = ntotal::check_zero_divisor_generation(ntotal::parse_ring("Z6"), 3);
  CHECK(z6.verdict == Verdict::Pass);
  CHECK(z6.predicted == "connected iff (Z(R)) = R");

  // even exponent without a root: only the forward implication is claimed
  const auto z21 = ntotal::check_zero_divisor_generation(
      ntotal::parse_ring("Z21"), 2);
  CHECK(z21.verdict == Verdict::Pass);
  CHECK(z21.predicted == "connected implies (Z(R)) = R");
}

TEST_CASE("diameter equals the minimal generator count") {
  const auto z6n1 = ntotal::check_diameter_generator_count(
      ntotal::parse_ring("Z6"), 1);
  CHECK(z6n1.verdict == Verdict::Pass);
  CHECK(z6n1.predicted == "diam = d(0,1) = m = 2");

  // even n, no root: not applicable, but the observed gap gets recorded
  const auto z6n2 = ntotal::check_diameter_generator_count(
      ntotal::parse_ring("Z6"), 2);
  CHECK(z6n2.verdict == Verdict::NotApplicable);
  CHECK(z6n2.note == "observed diam=3, d(0,1)=2");

  const auto z2z2 = ntotal::check_diameter_generator_count(
      ntotal::parse_ring("Z2 x Z2"), 2);
  CHECK(z2z2.verdict == Verdict::Pass);
  CHECK(z2z2.predicted == "diam = d(0,1) = m = 2");
}

TEST_CASE("regular diameter lower bound") {
  const auto z6 = ntotal::check_regular_diameter_lower_bound(
      ntotal::parse_ring("Z6"), 3);
  CHECK(z6.verdict == Verdict::Pass);

  const auto z2z2 = ntotal::check_regular_diameter_lower_bound(
      ntotal::parse_ring("Z2 x Z2"), 2);
  CHECK(z2z2.verdict == Verdict::Pass);

  const auto z15 = ntotal::check_regular_diameter_lower_bound(
      ntotal::parse_ring("Z15"), 1);
  CHECK(z15.verdict == Verdict::Pass);
}

TEST_CASE("product theorems") {
  for (const unsigned n : {1u, 3u, 5u}) {
    const auto report = ntotal::check_product_odd_exponent(
        ntotal::parse_ring("Z2 x Z3"), n);
    CHECK(report.verdict == Verdict::Pass);
    CHECK(report.observed == "connected=yes, diam=2");
  }

  // x^2 + 1 is never a zero divisor in either Z_3 factor
  const auto z3z3 = ntotal::check_product_even_exponent(
      ntotal::parse_ring("Z3 x Z3"), 2);
  CHECK(z3z3.verdict == Verdict::Pass);
  CHECK(z3z3.predicted == "not connected");

  // 1^2 + 1 = 0 in Z_2, and (1,1) squares to -(1,1)
  const auto z2z2 = ntotal::check_product_even_exponent(
      ntotal::parse_ring("Z2 x Z2"), 2);
  CHECK(z2z2.verdict == Verdict::Pass);
  CHECK(z2z2.predicted == "connected, diam=2");

  CHECK(ntotal::check_product_odd_exponent(ntotal::parse_ring("Z2 x Z3"), 2)
            .verdict == Verdict::NotApplicable);
  CHECK(ntotal::check_product_even_exponent(ntotal::parse_ring("Z6"), 2)
            .verdict == Verdict::NotApplicable);
}

TEST_CASE("suite aggregation and rendering") {
  const std::vector<RingSpec> specs = {RingSpec::modular(6),
                                       RingSpec::modular(8)};
  const auto result = ntotal::run_suite(specs, {1, 2}, {});
  CHECK(result.reports.size() == 2 * 2 * kCheckOrder.size());
  CHECK(result.passed + result.failed + result.not_applicable ==
        result.reports.size());
  CHECK(result.failed == 0);
  CHECK(result.all_passed());

  // reports arrive grouped by ring, then exponent, then check order
  CHECK(result.reports.front().ring == "Z6");
  CHECK(result.reports.front().n == 1);
  CHECK(result.reports.back().ring == "Z8");
  CHECK(result.reports.back().n == 2);

  const auto table = ntotal::reports_to_table(result.reports);
  CHECK(table.find("check") != std::string::npos);
  CHECK(table.find("complete-blocks") != std::string::npos);
  CHECK(table == ntotal::reports_to_table(result.reports));

  const auto json = ntotal::suite_to_json(result);
  CHECK(json.find("\"summary\"") != std::string::npos);
  CHECK(json.find("\"checks\": 44") != std::string::npos);
  CHECK(json == ntotal::suite_to_json(result));
}

TEST_CASE("ring families") {
  const auto curated = ntotal::curated_family();
  CHECK(curated.size() == 446);
  CHECK(std::count(curated.begin(), curated.end(), RingSpec::modular(343)) == 1);
  CHECK(std::count(curated.begin(), curated.end(),
                   RingSpec::poly_quotient(2, {1, 1, 0, 0, 0, 0, 1})) == 1);
  CHECK(std::count(curated.begin(), curated.end(),
                   RingSpec::product({RingSpec::modular(7),
                                      RingSpec::modular(7),
                                      RingSpec::modular(7)})) == 1);
  // no duplicates
  for (const auto& spec : curated)
    CHECK(std::count(curated.begin(), curated.end(), spec) == 1);

  const auto figures = ntotal::figure_family();
  REQUIRE(figures.size() == 4);
  CHECK(figures[0] == RingSpec::modular(8));
  CHECK(figures[1] == RingSpec::modular(6));
}

}  // TEST_SUITE

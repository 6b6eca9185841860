#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ntotal/graph.hpp"
#include "ntotal/ideal.hpp"
#include "ntotal/ring.hpp"

namespace ntotal {

enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(Verdict verdict);

// Outcome of one structural check on one (ring, n) pair. Fail reports always
// carry both the predicted and the observed value; NotApplicable reports say
// which hypothesis is missing. `note` records observations that the check
// does not assert.
struct VerificationReport {
  std::string check;
  std::string ring;
  unsigned n = 0;
  Verdict verdict = Verdict::NotApplicable;
  std::string hypothesis;
  std::string predicted;
  std::string observed;
  std::string note;
};

struct SuiteOptions {
  std::size_t generator_cap = kDefaultGeneratorCap;
  std::size_t vertex_cap = kDefaultVertexCap;
};

// Each check gates on its own hypotheses; in the descriptions below alpha,
// beta, gamma, d are the IdealCaseParams values and m = min_zd_generators.

// Z(R) an ideal and 2 in Z(R): the graph decomposes as K_alpha plus d copies
// of K_gamma.
VerificationReport check_complete_block_decomposition(const RingPtr& ring,
                                                      unsigned n);

// Z(R) an ideal and 2 not in Z(R): for odd d the regular part is totally
// disconnected, giving K_alpha plus alpha*(beta-1) isolated vertices; for
// even d it splits into d/2 copies of K_{gamma,gamma}.
VerificationReport check_bipartite_block_decomposition(const RingPtr& ring,
                                                       unsigned n);

// Z(R) an ideal, 2 not in Z(R), at least two regulars: the graph on Reg(R)
// is connected iff 2*gcd(n, beta-1) = beta-1, and then equals K_{gamma,gamma}.
VerificationReport check_regular_connectivity(const RingPtr& ring, unsigned n);

// Z(R) an ideal: diameter of the regular part lies in {0, 1, 2, inf} and its
// girth in {3, 4, inf}.
VerificationReport check_regular_diameter_girth_range(const RingPtr& ring,
                                                      unsigned n);

// Z(R) not an ideal: the graph on R is connected iff 0 and 1 are joined by a
// path.
VerificationReport check_zero_one_path_criterion(const RingPtr& ring, unsigned n);

// Z(R) not an ideal, n odd or some u^n = -1: if the graph on Reg(R) is
// connected then so is the graph on R. For even n with no root of -1 the
// implication is recorded but not asserted.
VerificationReport check_regular_connectivity_lifts(const RingPtr& ring,
                                                    unsigned n);

// Z(R) not an ideal: connectivity of the graph on R is equivalent to Z(R)
// generating R as an ideal (for n odd, or n even with a root of -1); for all
// other n connectivity still implies generation.
VerificationReport check_zero_divisor_generation(const RingPtr& ring, unsigned n);

// Z(R) not an ideal, (Z(R)) = R, n odd or a root of -1 exists: the diameter
// of the graph on R equals m, the least number of zero-divisor generators of
// R, and d(0, 1) = m.
VerificationReport check_diameter_generator_count(
    const RingPtr& ring, unsigned n, std::size_t cap = kDefaultGeneratorCap);

// Under the diameter-formula hypotheses, the regular part has diameter at
// least m - 2 (an infinite diameter counts as large enough).
VerificationReport check_regular_diameter_lower_bound(
    const RingPtr& ring, unsigned n, std::size_t cap = kDefaultGeneratorCap);

// R a direct product of at least two rings, n odd: connected with diameter 2.
VerificationReport check_product_odd_exponent(const RingPtr& ring, unsigned n);

// R a direct product, n even: connected iff some factor R_j has an x with
// x^n + 1 in Z(R_j); when some u in R satisfies u^n = -1 the diameter is 2.
VerificationReport check_product_even_exponent(const RingPtr& ring, unsigned n);

// Every check above, in a fixed order; exactly eleven reports per call.
std::vector<VerificationReport> run_checks(const RingPtr& ring, unsigned n,
                                           const SuiteOptions& options = {});

struct SuiteResult {
  std::vector<VerificationReport> reports;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t not_applicable = 0;

  bool all_passed() const { return failed == 0; }
};

// Checks every spec at every exponent; report order follows the spec order,
// then the exponent order, then the fixed check order.
SuiteResult run_suite(const std::vector<RingSpec>& specs,
                      const std::vector<unsigned>& exponents,
                      const SuiteOptions& options = {});

std::string reports_to_table(const std::vector<VerificationReport>& reports);
std::string suite_to_json(const SuiteResult& result);

// Default verification family: Z_m for m <= 343, Z_p[x]/(x^k) with
// p^k <= 343, the Galois fields through F_64, and all products of two or
// three factors drawn from Z_2..Z_7.
std::vector<RingSpec> curated_family();

// The four rings whose small graphs are kept as golden data: Z_8, Z_6,
// Z_3xZ_3 and Z_2xZ_2.
std::vector<RingSpec> figure_family();

}  // namespace ntotal

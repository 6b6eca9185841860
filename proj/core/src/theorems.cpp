#include "ntotal/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace ntotal {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* yn(bool value) { return value ? "yes" : "no"; }

// Analysis shared by every check on one ring: the zero-divisor profile and
// the exponent-independent ideal data.
struct RingState {
  RingPtr ring;
  std::size_t generator_cap;
  ZeroDivisorProfile profile;
  std::optional<bool> generates;
  std::optional<MinGenResult> min_gens;
  std::optional<std::vector<ZeroDivisorProfile>> factor_profiles;

  RingState(RingPtr r, std::size_t cap)
      : ring(std::move(r)), generator_cap(cap), profile(zero_divisor_profile(ring)) {}

  bool zd_generates() {
    if (!generates)
      generates = ideal_generated(*ring, profile.zero_divisors).size() ==
                  ring->cardinality();
    return *generates;
  }

  const MinGenResult& min_generators() {
    if (!min_gens) min_gens = min_zd_generators(profile, generator_cap);
    return *min_gens;
  }

  const std::vector<ZeroDivisorProfile>& factors() {
    if (!factor_profiles) {
      factor_profiles.emplace();
      for (const auto& f : ring->spec().as_product().factors)
        factor_profiles->push_back(zero_divisor_profile(make_ring(f)));
    }
    return *factor_profiles;
  }
};

// Graphs and the root-of-minus-one witness for one (ring, n) pair, built on
// first use so gated-out checks stay cheap.
struct PairState {
  RingState& rs;
  unsigned n;
  std::optional<NTotalGraph> all;
  std::optional<NTotalGraph> reg;
  std::optional<bool> root_exists;

  NTotalGraph& all_graph() {
    if (!all) all = build_graph(rs.profile, n, VertexSelector::All);
    return *all;
  }

  NTotalGraph& reg_graph() {
    if (!reg) reg = build_graph(rs.profile, n, VertexSelector::Reg);
    return *reg;
  }

  bool has_root() {
    if (!root_exists)
      root_exists = find_nth_root_of_minus_one(*rs.ring, n).has_value();
    return *root_exists;
  }

  bool two_is_zero_divisor() const {
    const auto& ring = *rs.ring;
    return rs.profile.zd_mask.test(
        ring.add_index(ring.one_index(), ring.one_index()));
  }

  Metric zero_one_distance() {
    auto& graph = all_graph();
    return distance(graph, rs.ring->zero(), rs.ring->one());
  }
};

VerificationReport base(const PairState& ps, const char* check) {
  VerificationReport report;
  report.check = check;
  report.ring = ps.rs.ring->name();
  report.n = ps.n;
  return report;
}

VerificationReport na(VerificationReport report, std::string reason) {
  report.verdict = Verdict::NotApplicable;
  report.hypothesis = std::move(reason);
  return report;
}

VerificationReport check_complete_blocks(PairState& ps) {
  auto report = base(ps, "complete-blocks");
  if (!ps.rs.profile.zr_is_ideal) return na(std::move(report), "Z(R) is not an ideal");
  if (!ps.two_is_zero_divisor())
    return na(std::move(report), "2 is not a zero-divisor");

  const auto params = ideal_case_params(ps.rs.profile, ps.n);
  std::vector<ComponentClass> classes{ComponentClass::complete(params.alpha)};
  for (std::size_t i = 0; i < params.d; ++i)
    classes.push_back(ComponentClass::complete(params.gamma));
  const auto predicted = DecompositionSignature::of(std::move(classes));
  const auto observed = signature(ps.all_graph());

  report.predicted = predicted.to_string();
  report.observed = observed.to_string();
  report.verdict = predicted == observed ? Verdict::Pass : Verdict::Fail;
  return report;
}

VerificationReport check_bipartite_blocks(PairState& ps) {
  auto report = base(ps, "bipartite-blocks");
  if (!ps.rs.profile.zr_is_ideal) return na(std::move(report), "Z(R) is not an ideal");
  if (ps.two_is_zero_divisor())
    return na(std::move(report), "2 is a zero-divisor");

  const auto params = ideal_case_params(ps.rs.profile, ps.n);
  std::vector<ComponentClass> classes{ComponentClass::complete(params.alpha)};
  bool extra_ok = true;
  std::string extra;
  if (params.d % 2 == 1) {
    for (std::size_t i = 0; i < params.alpha * (params.beta - 1); ++i)
      classes.push_back(ComponentClass::singleton());
    extra_ok = is_totally_disconnected(ps.reg_graph());
    extra = std::string("; Reg totally disconnected: ") + yn(extra_ok);
  } else {
    for (std::size_t i = 0; i < params.d / 2; ++i)
      classes.push_back(
          ComponentClass::complete_bipartite(params.gamma, params.gamma));
  }
  const auto predicted = DecompositionSignature::of(std::move(classes));
  const auto observed = signature(ps.all_graph());

  report.predicted = predicted.to_string();
  report.observed = observed.to_string() + extra;
  report.verdict =
      predicted == observed && extra_ok ? Verdict::Pass : Verdict::Fail;
  return report;
}

VerificationReport check_regular_connectivity_impl(PairState& ps) {
  auto report = base(ps, "reg-connectivity");
  if (!ps.rs.profile.zr_is_ideal) return na(std::move(report), "Z(R) is not an ideal");
  if (ps.two_is_zero_divisor())
    return na(std::move(report), "2 is a zero-divisor");
  if (ps.rs.profile.regulars.size() < 2)
    return na(std::move(report), "fewer than two regular elements");

  const auto params = ideal_case_params(ps.rs.profile, ps.n);
  const auto g = std::gcd<std::size_t>(ps.n, params.beta - 1);
  const bool condition = 2 * g == params.beta - 1;
  const bool connected = is_connected(ps.reg_graph());

  const auto block =
      ComponentClass::complete_bipartite(params.gamma, params.gamma);
  report.predicted =
      condition ? "connected, " + block.to_string() : "not connected";
  bool signature_ok = true;
  if (connected) {
    const auto observed = signature(ps.reg_graph());
    signature_ok = observed == DecompositionSignature::of({block});
    report.observed = "connected, " + observed.to_string();
  } else {
    report.observed = "not connected";
  }
  report.verdict =
      connected == condition && signature_ok ? Verdict::Pass : Verdict::Fail;
  return report;
}

VerificationReport check_regular_diameter_girth_range_impl(PairState& ps) {
  auto report = base(ps, "reg-diam-girth-range");
  if (!ps.rs.profile.zr_is_ideal) return na(std::move(report), "Z(R) is not an ideal");

  const auto diam = diameter(ps.reg_graph());
  const auto g = girth(ps.reg_graph());
  const bool diam_ok = !diam || *diam <= 2;
  const bool girth_ok = !g || *g == 3 || *g == 4;

  report.predicted = "diam(Reg) in {0,1,2,inf}, girth(Reg) in {3,4,inf}";
  report.observed = "diam(Reg)=" + metric_to_string(diam) +
                    ", girth(Reg)=" + metric_to_string(g);
  report.verdict = diam_ok && girth_ok ? Verdict::Pass : Verdict::Fail;
  return report;
}

VerificationReport check_zero_one_path_impl(PairState& ps) {
  auto report = base(ps, "zero-one-path");
  if (ps.rs.profile.zr_is_ideal) return na(std::move(report), "Z(R) is an ideal");

  const bool connected = is_connected(ps.all_graph());
  const auto d01 = ps.zero_one_distance();

  report.predicted = "connected iff d(0,1) < inf";
  report.observed = std::string("connected=") + yn(connected) +
                    ", d(0,1)=" + metric_to_string(d01);
  report.verdict =
      connected == d01.has_value() ? Verdict::Pass : Verdict::Fail;
  return report;
}

VerificationReport check_regular_connectivity_lifts_impl(PairState& ps) {
  auto report = base(ps, "reg-connected-lifts");
  if (ps.rs.profile.zr_is_ideal) return na(std::move(report), "Z(R) is an ideal");

  if (ps.n % 2 == 0 && !ps.has_root()) {
    auto out = na(std::move(report), "no u with u^n = -1");
    if (is_connected(ps.all_graph()))
      out.note = "n-T(R) is connected although no n-th root of -1 exists";
    return out;
  }
  if (!is_connected(ps.reg_graph()))
    return na(std::move(report), "n-T(Reg(R)) is not connected");

  const bool connected = is_connected(ps.all_graph());
  report.predicted = "connected";
  report.observed = connected ? "connected" : "not connected";
  report.verdict = connected ? Verdict::Pass : Verdict::Fail;
  return report;
}

VerificationReport check_zero_divisor_generation_impl(PairState& ps) {
  auto report = base(ps, "zd-generation");
  if (ps.rs.profile.zr_is_ideal) return na(std::move(report), "Z(R) is an ideal");

  const bool generates = ps.rs.zd_generates();
  const bool connected = is_connected(ps.all_graph());
  const bool biconditional = ps.n % 2 == 1 || ps.has_root();

  report.predicted = biconditional ? "connected iff (Z(R)) = R"
                                   : "connected implies (Z(R)) = R";
  report.observed = std::string("connected=") + yn(connected) +
                    ", (Z(R))=R: " + yn(generates);
  const bool ok = biconditional ? connected == generates : !connected || generates;
  report.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return report;
}

VerificationReport check_diameter_generator_count_impl(PairState& ps) {
  auto report = base(ps, "diam-generator-count");
  if (ps.rs.profile.zr_is_ideal) return na(std::move(report), "Z(R) is an ideal");
  if (!ps.rs.zd_generates())
    return na(std::move(report), "Z(R) does not generate R");
  if (ps.n % 2 == 0 && !ps.has_root()) {
    auto out = na(std::move(report), "no u with u^n = -1");
    out.note = "observed diam=" + metric_to_string(diameter(ps.all_graph())) +
               ", d(0,1)=" + metric_to_string(ps.zero_one_distance());
    return out;
  }

  const auto& min_gens = ps.rs.min_generators();
  if (min_gens.status != MinGenResult::Status::Found)
    return na(std::move(report), "generator search cap exceeded");
  const auto m = min_gens.count;

  const auto diam = diameter(ps.all_graph());
  const auto d01 = ps.zero_one_distance();
  report.predicted = "diam = d(0,1) = m = " + std::to_string(m);
  report.observed = "diam=" + metric_to_string(diam) +
                    ", d(0,1)=" + metric_to_string(d01) +
                    ", m=" + std::to_string(m);
  report.verdict =
      diam == Metric(m) && d01 == Metric(m) ? Verdict::Pass : Verdict::Fail;
  return report;
}

VerificationReport check_regular_diameter_lower_bound_impl(PairState& ps) {
  auto report = base(ps, "reg-diam-lower-bound");
  if (ps.rs.profile.zr_is_ideal) return na(std::move(report), "Z(R) is an ideal");
  if (!ps.rs.zd_generates())
    return na(std::move(report), "Z(R) does not generate R");
  if (ps.n % 2 == 0 && !ps.has_root())
    return na(std::move(report), "no u with u^n = -1");

  const auto& min_gens = ps.rs.min_generators();
  if (min_gens.status != MinGenResult::Status::Found)
    return na(std::move(report), "generator search cap exceeded");
  const auto m = min_gens.count;
  if (diameter(ps.all_graph()) != Metric(m))
    return na(std::move(report), "diameter does not equal m");

  const auto reg_diam = diameter(ps.reg_graph());
  const auto bound = m >= 2 ? m - 2 : 0;
  report.predicted = "diam(Reg) >= " + std::to_string(bound);
  report.observed = "diam(Reg)=" + metric_to_string(reg_diam) +
                    ", m=" + std::to_string(m);
  const bool ok = !reg_diam || *reg_diam + 2 >= m;
  report.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return report;
}

VerificationReport check_product_odd_impl(PairState& ps) {
  auto report = base(ps, "product-odd");
  if (!ps.rs.ring->spec().is_product())
    return na(std::move(report), "ring is not a direct product");
  if (ps.n % 2 == 0) return na(std::move(report), "n is even");

  const bool connected = is_connected(ps.all_graph());
  const auto diam = diameter(ps.all_graph());
  report.predicted = "connected, diam=2";
  report.observed = std::string("connected=") + yn(connected) +
                    ", diam=" + metric_to_string(diam);
  report.verdict =
      connected && diam == Metric(2) ? Verdict::Pass : Verdict::Fail;
  return report;
}

VerificationReport check_product_even_impl(PairState& ps) {
  auto report = base(ps, "product-even");
  if (!ps.rs.ring->spec().is_product())
    return na(std::move(report), "ring is not a direct product");
  if (ps.n % 2 == 1) return na(std::move(report), "n is odd");

  // some factor contains x with x^n + 1 a zero-divisor
  bool witness = false;
  for (const auto& fp : ps.rs.factors()) {
    const auto& fr = *fp.ring;
    for (std::size_t x = 0; x < fr.cardinality() && !witness; ++x)
      witness = fp.zd_mask.test(
          fr.add_index(fr.pow_index(x, ps.n), fr.one_index()));
    if (witness) break;
  }

  const bool connected = is_connected(ps.all_graph());
  const bool root = ps.has_root();
  const auto diam = diameter(ps.all_graph());

  report.predicted = std::string(witness ? "connected" : "not connected") +
                     (root ? ", diam=2" : "");
  report.observed = std::string("connected=") + yn(connected) +
                    ", diam=" + metric_to_string(diam);
  const bool ok = connected == witness && (!root || diam == Metric(2));
  report.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return report;
}

using CheckFn = VerificationReport (*)(PairState&);

constexpr CheckFn kChecks[] = {
    &check_complete_blocks,
    &check_bipartite_blocks,
    &check_regular_connectivity_impl,
    &check_regular_diameter_girth_range_impl,
    &check_zero_one_path_impl,
    &check_regular_connectivity_lifts_impl,
    &check_zero_divisor_generation_impl,
    &check_diameter_generator_count_impl,
    &check_regular_diameter_lower_bound_impl,
    &check_product_odd_impl,
    &check_product_even_impl,
};

VerificationReport run_single(const RingPtr& ring, unsigned n, std::size_t cap,
                              CheckFn check) {
  RingState state(ring, cap);
  PairState pair{state, n};
  return check(pair);
}

void tally(SuiteResult& result, const VerificationReport& report) {
  switch (report.verdict) {
    case Verdict::Pass:
      ++result.passed;
      break;
    case Verdict::Fail:
      ++result.failed;
      break;
    case Verdict::NotApplicable:
      ++result.not_applicable;
      break;
  }
}

}  // namespace

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NotApplicable:
      return "not-applicable";
  }
  return "";
}

VerificationReport check_complete_block_decomposition(const RingPtr& ring,
                                                      unsigned n) {
  return run_single(ring, n, kDefaultGeneratorCap, &check_complete_blocks);
}

VerificationReport check_bipartite_block_decomposition(const RingPtr& ring,
                                                       unsigned n) {
  return run_single(ring, n, kDefaultGeneratorCap, &check_bipartite_blocks);
}

VerificationReport check_regular_connectivity(const RingPtr& ring, unsigned n) {
  return run_single(ring, n, kDefaultGeneratorCap, &check_regular_connectivity_impl);
}

VerificationReport check_regular_diameter_girth_range(const RingPtr& ring,
                                                      unsigned n) {
  return run_single(ring, n, kDefaultGeneratorCap,
                    &check_regular_diameter_girth_range_impl);
}

VerificationReport check_zero_one_path_criterion(const RingPtr& ring, unsigned n) {
  return run_single(ring, n, kDefaultGeneratorCap, &check_zero_one_path_impl);
}

VerificationReport check_regular_connectivity_lifts(const RingPtr& ring,
                                                    unsigned n) {
  return run_single(ring, n, kDefaultGeneratorCap,
                    &check_regular_connectivity_lifts_impl);
}

VerificationReport check_zero_divisor_generation(const RingPtr& ring, unsigned n) {
  return run_single(ring, n, kDefaultGeneratorCap,
                    &check_zero_divisor_generation_impl);
}

VerificationReport check_diameter_generator_count(const RingPtr& ring, unsigned n,
                                                  std::size_t cap) {
  return run_single(ring, n, cap, &check_diameter_generator_count_impl);
}

VerificationReport check_regular_diameter_lower_bound(const RingPtr& ring,
                                                      unsigned n,
                                                      std::size_t cap) {
  return run_single(ring, n, cap, &check_regular_diameter_lower_bound_impl);
}

VerificationReport check_product_odd_exponent(const RingPtr& ring, unsigned n) {
  return run_single(ring, n, kDefaultGeneratorCap, &check_product_odd_impl);
}

VerificationReport check_product_even_exponent(const RingPtr& ring, unsigned n) {
  return run_single(ring, n, kDefaultGeneratorCap, &check_product_even_impl);
}

std::vector<VerificationReport> run_checks(const RingPtr& ring, unsigned n,
                                           const SuiteOptions& options) {
  RingState state(ring, options.generator_cap);
  PairState pair{state, n};
  std::vector<VerificationReport> reports;
  reports.reserve(std::size(kChecks));
  for (const auto check : kChecks) reports.push_back(check(pair));
  return reports;
}

SuiteResult run_suite(const std::vector<RingSpec>& specs,
                      const std::vector<unsigned>& exponents,
                      const SuiteOptions& options) {
  SuiteResult result;
  for (const auto& spec : specs) {
    RingState state(make_ring(spec, {options.vertex_cap}), options.generator_cap);
    for (const auto n : exponents) {
      PairState pair{state, n};
      for (const auto check : kChecks) {
        result.reports.push_back(check(pair));
        tally(result, result.reports.back());
      }
    }
  }
  return result;
}

std::string reports_to_table(const std::vector<VerificationReport>& reports) {
  const auto detail = [](const VerificationReport& r) {
    std::string out;
    if (r.verdict == Verdict::NotApplicable)
      out = "hypothesis missing: " + r.hypothesis;
    else
      out = "predicted: " + r.predicted + " | observed: " + r.observed;
    if (!r.note.empty()) out += " [" + r.note + "]";
    return out;
  };

  std::size_t check_w = 5, ring_w = 4, verdict_w = 7;
  for (const auto& r : reports) {
    check_w = std::max(check_w, r.check.size());
    ring_w = std::max(ring_w, r.ring.size());
    verdict_w = std::max(verdict_w, to_string(r.verdict).size());
  }
  const auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };

  std::ostringstream os;
  os << pad("check", check_w) << "  " << pad("ring", ring_w) << "  " << "  n"
     << "  " << pad("verdict", verdict_w) << "  detail\n";
  for (const auto& r : reports) {
    std::string n_text = std::to_string(r.n);
    if (n_text.size() < 3) n_text.insert(0, 3 - n_text.size(), ' ');
    os << pad(r.check, check_w) << "  " << pad(r.ring, ring_w) << "  " << n_text
       << "  " << pad(to_string(r.verdict), verdict_w) << "  " << detail(r)
       << "\n";
  }
  return os.str();
}

std::string suite_to_json(const SuiteResult& result) {
  ordered_json doc;
  auto& summary = doc["summary"];
  summary["checks"] = result.reports.size();
  summary["pass"] = result.passed;
  summary["fail"] = result.failed;
  summary["not_applicable"] = result.not_applicable;
  auto& reports = doc["reports"] = ordered_json::array();
  for (const auto& r : result.reports) {
    ordered_json row;
    row["check"] = r.check;
    row["ring"] = r.ring;
    row["n"] = r.n;
    row["verdict"] = to_string(r.verdict);
    row["hypothesis"] = r.hypothesis;
    row["predicted"] = r.predicted;
    row["observed"] = r.observed;
    row["note"] = r.note;
    reports.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::vector<RingSpec> curated_family() {
  std::vector<RingSpec> out;
  for (std::uint64_t m = 2; m <= 343; ++m) out.push_back(RingSpec::modular(m));

  for (const std::uint64_t p : {2, 3, 5, 7, 11, 13, 17}) {
    std::uint64_t card = p * p;
    for (std::size_t k = 2; card <= 343; ++k, card *= p) {
      std::vector<std::uint64_t> x_to_k(k + 1, 0);
      x_to_k[k] = 1;
      out.push_back(RingSpec::poly_quotient(p, std::move(x_to_k)));
    }
  }

  // irreducible moduli for the Galois fields through F_64
  const struct {
    std::uint64_t p;
    std::vector<std::uint64_t> f;
  } fields[] = {
      {2, {1, 1, 1}},           // F_4:  x^2+x+1
      {2, {1, 1, 0, 1}},        // F_8:  x^3+x+1
      {3, {1, 0, 1}},           // F_9:  x^2+1
      {2, {1, 1, 0, 0, 1}},     // F_16: x^4+x+1
      {5, {2, 0, 1}},           // F_25: x^2+2
      {3, {1, 2, 0, 1}},        // F_27: x^3+2x+1
      {2, {1, 0, 1, 0, 0, 1}},  // F_32: x^5+x^2+1
      {7, {1, 0, 1}},           // F_49: x^2+1
      {2, {1, 1, 0, 0, 0, 0, 1}},  // F_64: x^6+x+1
  };
  for (const auto& field : fields)
    out.push_back(RingSpec::poly_quotient(field.p, field.f));

  for (std::uint64_t i = 2; i <= 7; ++i)
    for (std::uint64_t j = i; j <= 7; ++j)
      out.push_back(
          RingSpec::product({RingSpec::modular(i), RingSpec::modular(j)}));
  for (std::uint64_t i = 2; i <= 7; ++i)
    for (std::uint64_t j = i; j <= 7; ++j)
      for (std::uint64_t k = j; k <= 7; ++k)
        out.push_back(RingSpec::product({RingSpec::modular(i),
                                         RingSpec::modular(j),
                                         RingSpec::modular(k)}));
  return out;
}

std::vector<RingSpec> figure_family() {
  return {
      RingSpec::modular(8),
      RingSpec::modular(6),
      RingSpec::product({RingSpec::modular(3), RingSpec::modular(3)}),
      RingSpec::product({RingSpec::modular(2), RingSpec::modular(2)}),
  };
}

}  // namespace ntotal

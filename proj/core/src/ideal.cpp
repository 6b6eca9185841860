#include "ntotal/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace ntotal {

namespace {

using ordered_json = nlohmann::ordered_json;

// Degree of gcd(a, f) over Z_p for nonzero a; a is given by its coefficient
// vector, possibly with high zero coefficients.
std::size_t poly_gcd_degree(std::uint64_t p, std::vector<std::uint64_t> a,
                            std::vector<std::uint64_t> b) {
  const auto degree = [](const std::vector<std::uint64_t>& v) -> std::ptrdiff_t {
    for (std::size_t i = v.size(); i-- > 0;)
      if (v[i] != 0) return static_cast<std::ptrdiff_t>(i);
    return -1;
  };
  auto da = degree(a), db = degree(b);
  while (db >= 0) {
    // a mod b
    while (da >= db) {
      const auto lead_b = b[static_cast<std::size_t>(db)];
      std::uint64_t inv = 1;
      for (std::uint64_t t = lead_b, e = p - 2; e; e >>= 1) {
        if (e & 1) inv = inv * t % p;
        t = t * t % p;
      }
      const auto scale = a[static_cast<std::size_t>(da)] * inv % p;
      if (scale != 0) {
        const auto shift = static_cast<std::size_t>(da - db);
        for (std::size_t i = 0; i <= static_cast<std::size_t>(db); ++i) {
          auto& c = a[i + shift];
          c = (c + (p - b[i] * scale % p)) % p;
        }
      }
      const auto before = da;
      da = degree(a);
      if (da == before) throw Error(ErrorCode::Internal, "poly division stuck");
    }
    std::swap(a, b);
    std::swap(da, db);
  }
  if (da < 0) throw Error(ErrorCode::Internal, "poly gcd of zero polynomials");
  return static_cast<std::size_t>(da);
}

bool zd_componentwise_impl(const RingSpec& spec, const Element& a) {
  if (spec.is_modular())
    return std::gcd(a.residue_value(), spec.as_modular().modulus) > 1;
  if (spec.is_poly_quotient()) {
    const auto& pq = spec.as_poly_quotient();
    const bool zero = std::all_of(a.poly_coeffs().begin(), a.poly_coeffs().end(),
                                  [](std::uint64_t c) { return c == 0; });
    if (zero) return true;
    return poly_gcd_degree(pq.characteristic, a.poly_coeffs(), pq.modulus) > 0;
  }
  const auto& factors = spec.as_product().factors;
  for (std::size_t j = 0; j < factors.size(); ++j)
    if (zd_componentwise_impl(factors[j], a.tuple_parts()[j])) return true;
  return false;
}

std::vector<std::size_t> labels_sorted(const Bitset& mask) { return mask.to_indices(); }

}  // namespace

bool is_zero_divisor_componentwise(const Ring& ring, std::size_t index) {
  return zd_componentwise_impl(ring.spec(), ring.element_at(index));
}

ZeroDivisorProfile zero_divisor_profile(const RingPtr& ring) {
  const auto n = ring->cardinality();
  ZeroDivisorProfile profile;
  profile.ring = ring;
  profile.zd_mask = Bitset(n);

  if (ring->spec().is_modular()) {
    const auto m = ring->spec().as_modular().modulus;
    for (std::size_t i = 0; i < n; ++i)
      if (std::gcd(static_cast<std::uint64_t>(i), m) > 1) profile.zd_mask.set(i);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0) {
        profile.zd_mask.set(i);
        continue;
      }
      for (std::size_t j = 1; j < n; ++j) {
        if (ring->mul_index(i, j) == 0) {
          profile.zd_mask.set(i);
          break;
        }
      }
    }
  }

  profile.zero_divisors = labels_sorted(profile.zd_mask);
  profile.alpha = profile.zero_divisors.size();
  profile.regulars.reserve(n - profile.alpha);
  for (std::size_t i = 0; i < n; ++i)
    if (!profile.zd_mask.test(i)) profile.regulars.push_back(i);

  const auto one = ring->one_index();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ring->mul_index(i, j) == one) {
        profile.units.push_back(i);
        break;
      }
    }
  }

  // a^(2^t) = 0 for some t iff a is nilpotent, since nilpotency indices are
  // bounded by |R|
  std::size_t squarings = 0;
  for (std::size_t reach = 1; reach < n; reach *= 2) ++squarings;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = i;
    for (std::size_t t = 0; t < squarings && v != 0; ++t) v = ring->mul_index(v, v);
    if (v == 0) profile.nilpotents.push_back(i);
  }

  profile.zr_is_ideal = is_ideal(*ring, profile.zd_mask);
  if (profile.zr_is_ideal) profile.beta = n / profile.alpha;
  return profile;
}

bool is_ideal(const Ring& ring, const Bitset& subset) {
  if (subset.size() != ring.cardinality())
    throw Error(ErrorCode::InvalidArgument, "subset mask has the wrong size");
  if (!subset.test(0)) return false;
  const auto members = subset.to_indices();
  for (const auto a : members)
    if (!subset.test(ring.neg_index(a))) return false;
  for (std::size_t x = 0; x < members.size(); ++x)
    for (std::size_t y = x; y < members.size(); ++y)
      if (!subset.test(ring.add_index(members[x], members[y]))) return false;
  for (std::size_t r = 0; r < ring.cardinality(); ++r)
    for (const auto a : members)
      if (!subset.test(ring.mul_index(r, a))) return false;
  return true;
}

bool is_ideal(const Ring& ring, std::span<const std::size_t> subset) {
  Bitset mask(ring.cardinality());
  for (const auto i : subset) {
    if (i >= ring.cardinality())
      throw Error(ErrorCode::InvalidArgument, "subset index out of range");
    mask.set(i);
  }
  return is_ideal(ring, mask);
}

std::vector<std::size_t> ideal_generated(const Ring& ring,
                                         std::span<const std::size_t> generators) {
  if (generators.empty())
    throw Error(ErrorCode::InvalidArgument, "ideal_generated needs a generator");
  const auto n = ring.cardinality();
  Bitset in_set(n);
  std::vector<std::size_t> members;

  const auto insert = [&](std::size_t v) {
    if (!in_set.test(v)) {
      in_set.set(v);
      members.push_back(v);
    }
  };

  // all ring multiples of the generators; closed under negation and
  // absorption already, so only additive closure remains
  for (const auto g : generators) {
    if (g >= n)
      throw Error(ErrorCode::InvalidArgument, "generator index out of range");
    for (std::size_t r = 0; r < n; ++r) insert(ring.mul_index(r, g));
  }

  for (std::size_t next = 0; next < members.size(); ++next) {
    const auto x = members[next];
    for (std::size_t k = 0; k <= next; ++k) {
      const auto s = ring.add_index(x, members[k]);
      insert(s);
    }
  }

  std::sort(members.begin(), members.end());
  return members;
}

MinGenResult min_zd_generators(const ZeroDivisorProfile& profile, std::size_t cap) {
  const auto& ring = *profile.ring;
  const auto n = ring.cardinality();

  if (ideal_generated(ring, profile.zero_divisors).size() != n)
    return {MinGenResult::Status::NotGenerating, 0};

  std::vector<std::size_t> candidates;  // Z(R) \ {0}; 0 never helps a generating set
  for (const auto z : profile.zero_divisors)
    if (z != 0) candidates.push_back(z);

  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= cap && size <= candidates.size(); ++size) {
    std::vector<std::size_t> at(size);
    std::iota(at.begin(), at.end(), 0);
    while (true) {
      pick.clear();
      for (const auto i : at) pick.push_back(candidates[i]);
      if (ideal_generated(ring, pick).size() == n)
        return {MinGenResult::Status::Found, size};
      // next lexicographic combination
      std::size_t k = size;
      while (k-- > 0) {
        if (at[k] + (size - k) < candidates.size()) {
          ++at[k];
          for (std::size_t j = k + 1; j < size; ++j) at[j] = at[j - 1] + 1;
          break;
        }
        if (k == 0) goto next_size;
      }
    }
  next_size:;
  }
  return {MinGenResult::Status::CapExceeded, 0};
}

MinGenResult min_zd_generators(const RingPtr& ring, std::size_t cap) {
  return min_zd_generators(zero_divisor_profile(ring), cap);
}

IdealCaseParams ideal_case_params(const ZeroDivisorProfile& profile, unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
  if (!profile.zr_is_ideal)
    throw Error(ErrorCode::NotAnIdeal,
                "Z(R) is not an ideal in " + profile.ring->name());
  IdealCaseParams params;
  params.n = n;
  params.alpha = profile.alpha;
  params.beta = *profile.beta;
  const auto g = std::gcd<std::size_t>(n, params.beta - 1);
  params.gamma = params.alpha * g;
  params.d = (params.beta - 1) / g;
  if (params.gamma * params.d != params.alpha * (params.beta - 1))
    throw Error(ErrorCode::Internal, "ideal case parameter identity failed");
  return params;
}

IdealCaseParams ideal_case_params(const RingPtr& ring, unsigned n) {
  return ideal_case_params(zero_divisor_profile(ring), n);
}

NthPowerClasses nth_power_classes(const ZeroDivisorProfile& profile, unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
  if (!profile.zr_is_ideal)
    throw Error(ErrorCode::NotAnIdeal,
                "Z(R) is not an ideal in " + profile.ring->name());
  const auto& ring = *profile.ring;
  const auto count = ring.cardinality();

  NthPowerClasses out;
  out.n = n;
  out.coset_of.assign(count, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < count; ++i) {
    if (out.coset_of[i] != static_cast<std::size_t>(-1)) continue;
    const auto id = out.coset_reps.size();
    out.coset_reps.push_back(i);
    for (const auto z : profile.zero_divisors)
      out.coset_of[ring.add_index(i, z)] = id;
    if (out.coset_of[i] != id)
      throw Error(ErrorCode::Internal, "coset enumeration failed");
  }
  out.coset_count = out.coset_reps.size();
  if (out.coset_count * profile.alpha != count || out.coset_count != *profile.beta)
    throw Error(ErrorCode::Internal, "coset count mismatch");

  const auto beta = out.coset_count;
  std::vector<std::size_t> image_of(beta, 0);  // n-th power map on F*
  Bitset in_image(beta);
  for (std::size_t c = 1; c < beta; ++c) {
    const auto pc = out.coset_of[ring.pow_index(out.coset_reps[c], n)];
    if (pc == 0)
      throw Error(ErrorCode::Internal, "regular coset powered into Z(R)");
    image_of[c] = pc;
    in_image.set(pc);
  }
  out.power_classes = in_image.to_indices();
  out.fibers.resize(out.power_classes.size());
  for (std::size_t c = 1; c < beta; ++c) {
    const auto at = std::lower_bound(out.power_classes.begin(),
                                     out.power_classes.end(), image_of[c]) -
                    out.power_classes.begin();
    out.fibers[static_cast<std::size_t>(at)].push_back(c);
  }

  const auto g = std::gcd<std::size_t>(n, beta - 1);
  if (out.power_classes.size() != (beta - 1) / g)
    throw Error(ErrorCode::Internal, "n-th power image has unexpected size");
  for (const auto& fiber : out.fibers)
    if (fiber.size() != g)
      throw Error(ErrorCode::Internal, "n-th power fiber has unexpected size");
  return out;
}

NthPowerClasses nth_power_classes(const RingPtr& ring, unsigned n) {
  return nth_power_classes(zero_divisor_profile(ring), n);
}

std::optional<Element> find_nth_root_of_minus_one(const Ring& ring, unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
  const auto minus_one = ring.neg_index(ring.one_index());
  for (std::size_t i = 0; i < ring.cardinality(); ++i)
    if (ring.pow_index(i, n) == minus_one) return ring.element_at(i);
  return std::nullopt;
}

std::string profile_to_text(const ZeroDivisorProfile& profile) {
  const auto& ring = *profile.ring;
  const auto join = [&](const std::vector<std::size_t>& indices) {
    std::string out;
    for (const auto i : indices) {
      if (!out.empty()) out += ' ';
      out += ring.to_string(ring.element_at(i));
    }
    return out;
  };
  std::ostringstream os;
  os << "ring: " << ring.name() << '\n';
  os << "cardinality: " << ring.cardinality() << '\n';
  os << "zero divisors (" << profile.zero_divisors.size()
     << "): " << join(profile.zero_divisors) << '\n';
  os << "regulars (" << profile.regulars.size() << "): " << join(profile.regulars)
     << '\n';
  os << "nilpotents (" << profile.nilpotents.size()
     << "): " << join(profile.nilpotents) << '\n';
  os << "units (" << profile.units.size() << "): " << join(profile.units) << '\n';
  os << "Z(R) is an ideal: " << (profile.zr_is_ideal ? "yes" : "no") << '\n';
  os << "alpha: " << profile.alpha << '\n';
  if (profile.beta) os << "beta: " << *profile.beta << '\n';
  return os.str();
}

std::string profile_to_json(const ZeroDivisorProfile& profile) {
  const auto& ring = *profile.ring;
  ordered_json doc;
  doc["ring"] = ring.name();
  doc["cardinality"] = ring.cardinality();
  doc["alpha"] = profile.alpha;
  if (profile.beta) doc["beta"] = *profile.beta;
  doc["zr_is_ideal"] = profile.zr_is_ideal;
  auto& zd = doc["zero_divisors"] = ordered_json::array();
  for (const auto i : profile.zero_divisors)
    zd.push_back(ring.to_string(ring.element_at(i)));
  return doc.dump(2) + "\n";
}

}  // namespace ntotal

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ntotal/bitset.hpp"
#include "ntotal/ring.hpp"

namespace ntotal {

// Zero-divisor structure of a finite commutative ring. All element sets are
// ascending index lists into the ring enumeration. By convention 0 is a
// zero-divisor, so zero_divisors and regulars partition the ring.
struct ZeroDivisorProfile {
  RingPtr ring;
  std::vector<std::size_t> zero_divisors;
  std::vector<std::size_t> regulars;
  std::vector<std::size_t> nilpotents;
  std::vector<std::size_t> units;
  Bitset zd_mask;
  bool zr_is_ideal = false;
  std::size_t alpha = 0;                // |Z(R)|
  std::optional<std::size_t> beta;      // |R| / alpha, only when Z(R) is an ideal
};

// Full-scan zero-divisor detection (with a gcd fast path for modular rings),
// unit detection by witness search, nilpotents by repeated squaring.
ZeroDivisorProfile zero_divisor_profile(const RingPtr& ring);

// Componentwise zero-divisor rule: in a product, an element is a zero-divisor
// iff some component is one in its factor; in Z_m, iff gcd(a, m) > 1; in
// Z_p[x]/(f), iff gcd(a, f) is nonconstant. Used to cross-check the scan.
bool is_zero_divisor_componentwise(const Ring& ring, std::size_t index);

std::string profile_to_text(const ZeroDivisorProfile& profile);
std::string profile_to_json(const ZeroDivisorProfile& profile);

// Subset closed under addition and negation, absorbing under ring
// multiplication, and containing 0.
bool is_ideal(const Ring& ring, const Bitset& subset);
bool is_ideal(const Ring& ring, std::span<const std::size_t> subset);

// Smallest ideal containing the generators: additive closure of
// { r*g : r in R, g in generators }, grown by worklist saturation.
std::vector<std::size_t> ideal_generated(const Ring& ring,
                                         std::span<const std::size_t> generators);

struct MinGenResult {
  enum class Status {
    Found,          // count holds the least number of zero-divisor generators
    NotGenerating,  // Z(R) itself does not generate R
    CapExceeded,    // every generating set needs more than cap elements
  };

  Status status = Status::NotGenerating;
  std::size_t count = 0;
};

// Least m such that some m zero-divisors generate R as an ideal, by
// exhaustive search over subsets of Z(R) \ {0} in enumeration order.
MinGenResult min_zd_generators(const ZeroDivisorProfile& profile,
                               std::size_t cap = kDefaultGeneratorCap);
MinGenResult min_zd_generators(const RingPtr& ring,
                               std::size_t cap = kDefaultGeneratorCap);

// Parameters of the block decompositions when Z(R) is an ideal:
//   alpha = |Z(R)|, beta = |R/Z(R)|,
//   gamma = alpha * gcd(n, beta - 1), d = (beta - 1) / gcd(n, beta - 1).
// Always gamma * d = alpha * (beta - 1) = |Reg(R)|.
struct IdealCaseParams {
  unsigned n = 0;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;
  std::size_t d = 0;
};

IdealCaseParams ideal_case_params(const ZeroDivisorProfile& profile, unsigned n);
IdealCaseParams ideal_case_params(const RingPtr& ring, unsigned n);

// Coset structure of the quotient field F = R/Z(R) together with the image
// and fibers of the n-th power map on F*. Cosets are numbered in order of
// their first element; coset 0 is Z(R) itself.
struct NthPowerClasses {
  unsigned n = 0;
  std::size_t coset_count = 0;                   // beta
  std::vector<std::size_t> coset_of;             // element index -> coset id
  std::vector<std::size_t> coset_reps;           // coset id -> element index
  std::vector<std::size_t> power_classes;        // S_n as ascending coset ids
  std::vector<std::vector<std::size_t>> fibers;  // fibers[i] = {w : w^n = S_n[i]}
};

// Requires Z(R) to be an ideal (throws NotAnIdeal otherwise). Verifies
// |S_n| = (beta-1)/gcd(n, beta-1) and that every fiber has size
// gcd(n, beta-1).
NthPowerClasses nth_power_classes(const ZeroDivisorProfile& profile, unsigned n);
NthPowerClasses nth_power_classes(const RingPtr& ring, unsigned n);

// First u in enumeration order with u^n = -1, if any.
std::optional<Element> find_nth_root_of_minus_one(const Ring& ring, unsigned n);

}  // namespace ntotal

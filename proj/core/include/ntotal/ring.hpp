#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ntotal {

constexpr std::size_t kDefaultVertexCap = 8192;
constexpr std::size_t kDefaultGeneratorCap = 6;

enum class ErrorCode {
  InvalidSpec,      // malformed ring description
  ParseError,       // ring spec text does not parse
  NonPrimeModulus,  // polynomial quotient over a composite base
  TrivialRing,      // ring with 1 = 0
  CardinalityCap,   // ring larger than the configured vertex cap
  MixedRings,       // element does not belong to the ring it was passed to
  NotAnIdeal,       // operation requires Z(R) to be an ideal
  VertexNotInGraph,
  NotAComponent,
  InvalidArgument,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct RingSpec;

// Z_m, integers modulo m, m >= 2. m is not required to be prime.
struct ModularSpec {
  std::uint64_t modulus = 0;

  bool operator==(const ModularSpec&) const = default;
};

// Z_p[x]/(f), p prime. Coefficients of f are stored in ascending degree with
// a nonzero leading coefficient; f is not required to be irreducible, so the
// quotient may have nilpotents (e.g. Z_2[x]/(x^2)).
struct PolyQuotientSpec {
  std::uint64_t characteristic = 0;
  std::vector<std::uint64_t> modulus;

  std::size_t degree() const { return modulus.size() - 1; }

  bool operator==(const PolyQuotientSpec&) const = default;
};

// Direct product R_1 x ... x R_t, componentwise operations. Factors may
// themselves be products.
struct ProductSpec {
  std::vector<RingSpec> factors;

  bool operator==(const ProductSpec&) const = default;
};

struct RingSpec {
  std::variant<ModularSpec, PolyQuotientSpec, ProductSpec> node;

  static RingSpec modular(std::uint64_t m) { return {ModularSpec{m}}; }

  static RingSpec poly_quotient(std::uint64_t p, std::vector<std::uint64_t> f) {
    return {PolyQuotientSpec{p, std::move(f)}};
  }

  static RingSpec product(std::vector<RingSpec> factors) {
    return {ProductSpec{std::move(factors)}};
  }

  bool is_modular() const { return std::holds_alternative<ModularSpec>(node); }
  bool is_poly_quotient() const {
    return std::holds_alternative<PolyQuotientSpec>(node);
  }
  bool is_product() const { return std::holds_alternative<ProductSpec>(node); }

  const ModularSpec& as_modular() const { return std::get<ModularSpec>(node); }
  const PolyQuotientSpec& as_poly_quotient() const {
    return std::get<PolyQuotientSpec>(node);
  }
  const ProductSpec& as_product() const { return std::get<ProductSpec>(node); }

  bool operator==(const RingSpec&) const = default;
};

// Parses the plain-text ring syntax:
//   Z8                          integers mod 8
//   GF(2)[x]/(x^2+x+1)          polynomial quotient (here: the field F_4)
//   Z3xZ3                       product, factors separated by 'x'
//   Z2xGF(3)[x]/(x^2+1)         factors of any kind, parentheses group
RingSpec parse_ring_spec(std::string_view text);

// Canonical text for a spec; round-trips through parse_ring_spec.
std::string to_string(const RingSpec& spec);

// A ring element in canonical form: a residue in [0, m) for modular rings, a
// coefficient vector (ascending degree, length deg f, entries in [0, p)) for
// polynomial quotients, and a tuple for products. Elements are plain values;
// arithmetic lives on Ring.
class Element {
 public:
  Element() = default;

  bool operator==(const Element&) const = default;

  // Exposed for Ring and for structural inspection; construct elements
  // through Ring or these factories only with in-range values.
  static Element residue(std::uint64_t r) { return Element(Repr{r}); }
  static Element poly(std::vector<std::uint64_t> coeffs) {
    return Element(Repr{std::move(coeffs)});
  }
  static Element tuple(std::vector<Element> parts) {
    return Element(Repr{std::move(parts)});
  }

  bool is_residue() const { return repr_.index() == 0; }
  bool is_poly() const { return repr_.index() == 1; }
  bool is_tuple() const { return repr_.index() == 2; }

  std::uint64_t residue_value() const { return std::get<0>(repr_); }
  const std::vector<std::uint64_t>& poly_coeffs() const {
    return std::get<1>(repr_);
  }
  const std::vector<Element>& tuple_parts() const { return std::get<2>(repr_); }

 private:
  using Repr =
      std::variant<std::uint64_t, std::vector<std::uint64_t>, std::vector<Element>>;

  explicit Element(Repr r) : repr_(std::move(r)) {}

  Repr repr_;
};

struct RingOptions {
  std::size_t vertex_cap = kDefaultVertexCap;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A finite commutative ring with identity, fully materialized: construction
// validates the spec, checks the cardinality cap and enumerates all elements
// in a fixed lexicographic order. Immutable afterwards; share via RingPtr.
class Ring {
 public:
  const RingSpec& spec() const { return spec_; }
  const std::string& name() const { return name_; }
  std::size_t cardinality() const { return elements_.size(); }

  // Deterministic enumeration; zero is always at index 0.
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element_at(std::size_t index) const;

  const Element& zero() const { return elements_[0]; }
  const Element& one() const { return elements_[one_index_]; }
  std::size_t one_index() const { return one_index_; }

  bool contains(const Element& a) const noexcept;

  // Position of a in the enumeration. Throws MixedRings if a is not in
  // canonical form for this ring.
  std::size_t index_of(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;

  // a^e by square and multiply; pow(a, 0) = 1.
  Element pow(const Element& a, std::uint64_t e) const;

  // Index-space arithmetic; equivalent to converting through Element.
  std::size_t add_index(std::size_t i, std::size_t j) const;
  std::size_t neg_index(std::size_t i) const;
  std::size_t mul_index(std::size_t i, std::size_t j) const;
  std::size_t pow_index(std::size_t i, std::uint64_t e) const;

  std::string to_string(const Element& a) const;

  friend RingPtr make_ring(RingSpec spec, const RingOptions& options);

 private:
  explicit Ring(RingSpec spec, const RingOptions& options);

  RingSpec spec_;
  std::string name_;
  std::vector<Element> elements_;
  std::size_t one_index_ = 0;
};

RingPtr make_ring(RingSpec spec, const RingOptions& options = {});
RingPtr parse_ring(std::string_view text, const RingOptions& options = {});

bool is_prime(std::uint64_t n);

}  // namespace ntotal

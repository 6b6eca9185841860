#include "ntotal/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace ntotal {

namespace {

// ============================================================================
// Spec validation and normalization
// ============================================================================

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; p prime and a in [1, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(ErrorCode::Internal, "mod_inverse: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

void normalize_spec(RingSpec& spec) {
  if (spec.is_modular()) {
    auto m = spec.as_modular().modulus;
    if (m == 0)
      throw Error(ErrorCode::InvalidSpec, "modulus must be at least 2");
    if (m == 1)
      throw Error(ErrorCode::TrivialRing, "Z1 is the zero ring (1 = 0)");
  } else if (spec.is_poly_quotient()) {
    auto& pq = std::get<PolyQuotientSpec>(spec.node);
    if (!is_prime(pq.characteristic))
      throw Error(ErrorCode::NonPrimeModulus,
                  "GF(" + std::to_string(pq.characteristic) +
                      "): base must be prime");
    if (pq.modulus.empty())
      throw Error(ErrorCode::InvalidSpec, "empty polynomial modulus");
    const auto p = pq.characteristic;
    for (auto& c : pq.modulus) c %= p;
    if (pq.modulus.back() == 0)
      throw Error(ErrorCode::InvalidSpec,
                  "polynomial modulus has zero leading coefficient");
    if (pq.degree() == 0)
      throw Error(ErrorCode::TrivialRing,
                  "constant polynomial modulus gives the zero ring");
    // make the modulus monic; the generated ideal, and hence the quotient,
    // is unchanged
    if (pq.modulus.back() != 1) {
      const auto inv = mod_inverse(pq.modulus.back(), p);
      for (auto& c : pq.modulus) c = c * inv % p;
    }
  } else {
    auto& factors = std::get<ProductSpec>(spec.node).factors;
    if (factors.size() < 2)
      throw Error(ErrorCode::InvalidSpec,
                  "product needs at least two factors");
    for (auto& f : factors) normalize_spec(f);
  }
}

std::size_t cardinality_checked(const RingSpec& spec, std::size_t cap) {
  const auto check = [cap](std::uint64_t value) -> std::size_t {
    if (value > cap)
      throw Error(ErrorCode::CardinalityCap,
                  "ring cardinality exceeds the vertex cap (" +
                      std::to_string(cap) + ")");
    return static_cast<std::size_t>(value);
  };
  if (spec.is_modular()) return check(spec.as_modular().modulus);
  if (spec.is_poly_quotient()) {
    const auto& pq = spec.as_poly_quotient();
    std::uint64_t card = 1;
    for (std::size_t i = 0; i < pq.degree(); ++i)
      card = check(card * pq.characteristic);
    return check(card);
  }
  std::uint64_t card = 1;
  for (const auto& f : spec.as_product().factors)
    card = check(card * cardinality_checked(f, cap));
  return check(card);
}

std::size_t cardinality_of(const RingSpec& spec) {
  return cardinality_checked(spec, static_cast<std::size_t>(-1));
}

// ============================================================================
// Element construction and structural checks
// ============================================================================

Element decode_element(const RingSpec& spec, std::size_t index) {
  if (spec.is_modular()) return Element::residue(index);
  if (spec.is_poly_quotient()) {
    const auto& pq = spec.as_poly_quotient();
    std::vector<std::uint64_t> coeffs(pq.degree());
    for (auto& c : coeffs) {
      c = index % pq.characteristic;
      index /= pq.characteristic;
    }
    return Element::poly(std::move(coeffs));
  }
  const auto& factors = spec.as_product().factors;
  std::vector<Element> parts(factors.size());
  for (std::size_t j = factors.size(); j-- > 0;) {
    const auto card = cardinality_of(factors[j]);
    parts[j] = decode_element(factors[j], index % card);
    index /= card;
  }
  return Element::tuple(std::move(parts));
}

// Mixed-radix position of a canonical element; the inverse of decode_element.
std::size_t encode_element(const RingSpec& spec, const Element& a) {
  if (spec.is_modular()) return static_cast<std::size_t>(a.residue_value());
  if (spec.is_poly_quotient()) {
    const auto& pq = spec.as_poly_quotient();
    const auto& coeffs = a.poly_coeffs();
    std::size_t index = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
      index = index * pq.characteristic + coeffs[i];
    return index;
  }
  const auto& factors = spec.as_product().factors;
  const auto& parts = a.tuple_parts();
  std::size_t index = 0;
  for (std::size_t j = 0; j < factors.size(); ++j)
    index = index * cardinality_of(factors[j]) + encode_element(factors[j], parts[j]);
  return index;
}

bool conforms(const RingSpec& spec, const Element& a) {
  if (spec.is_modular())
    return a.is_residue() && a.residue_value() < spec.as_modular().modulus;
  if (spec.is_poly_quotient()) {
    const auto& pq = spec.as_poly_quotient();
    if (!a.is_poly()) return false;
    const auto& coeffs = a.poly_coeffs();
    if (coeffs.size() != pq.degree()) return false;
    for (auto c : coeffs)
      if (c >= pq.characteristic) return false;
    return true;
  }
  const auto& factors = spec.as_product().factors;
  if (!a.is_tuple()) return false;
  const auto& parts = a.tuple_parts();
  if (parts.size() != factors.size()) return false;
  for (std::size_t j = 0; j < factors.size(); ++j)
    if (!conforms(factors[j], parts[j])) return false;
  return true;
}

// ============================================================================
// Arithmetic on canonical forms
// ============================================================================

Element add_impl(const RingSpec& spec, const Element& a, const Element& b) {
  if (spec.is_modular()) {
    const auto m = spec.as_modular().modulus;
    return Element::residue((a.residue_value() + b.residue_value()) % m);
  }
  if (spec.is_poly_quotient()) {
    const auto p = spec.as_poly_quotient().characteristic;
    auto coeffs = a.poly_coeffs();
    const auto& bc = b.poly_coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      coeffs[i] = (coeffs[i] + bc[i]) % p;
    return Element::poly(std::move(coeffs));
  }
  const auto& factors = spec.as_product().factors;
  std::vector<Element> parts(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j)
    parts[j] = add_impl(factors[j], a.tuple_parts()[j], b.tuple_parts()[j]);
  return Element::tuple(std::move(parts));
}

Element neg_impl(const RingSpec& spec, const Element& a) {
  if (spec.is_modular()) {
    const auto m = spec.as_modular().modulus;
    return Element::residue((m - a.residue_value()) % m);
  }
  if (spec.is_poly_quotient()) {
    const auto p = spec.as_poly_quotient().characteristic;
    auto coeffs = a.poly_coeffs();
    for (auto& c : coeffs) c = (p - c) % p;
    return Element::poly(std::move(coeffs));
  }
  const auto& factors = spec.as_product().factors;
  std::vector<Element> parts(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j)
    parts[j] = neg_impl(factors[j], a.tuple_parts()[j]);
  return Element::tuple(std::move(parts));
}

Element mul_impl(const RingSpec& spec, const Element& a, const Element& b) {
  if (spec.is_modular()) {
    const auto m = spec.as_modular().modulus;
    return Element::residue(a.residue_value() * b.residue_value() % m);
  }
  if (spec.is_poly_quotient()) {
    const auto& pq = spec.as_poly_quotient();
    const auto p = pq.characteristic;
    const auto k = pq.degree();
    const auto& ac = a.poly_coeffs();
    const auto& bc = b.poly_coeffs();
    std::vector<std::uint64_t> conv(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (ac[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j)
        conv[i + j] = (conv[i + j] + ac[i] * bc[j]) % p;
    }
    // reduce by the monic modulus: x^k = -(f - x^k)
    for (std::size_t i = conv.size(); i-- > k;) {
      const auto c = conv[i];
      if (c == 0) continue;
      conv[i] = 0;
      for (std::size_t j = 0; j < k; ++j)
        conv[i - k + j] = (conv[i - k + j] + (p - pq.modulus[j]) * c) % p;
    }
    conv.resize(k);
    return Element::poly(std::move(conv));
  }
  const auto& factors = spec.as_product().factors;
  std::vector<Element> parts(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j)
    parts[j] = mul_impl(factors[j], a.tuple_parts()[j], b.tuple_parts()[j]);
  return Element::tuple(std::move(parts));
}

Element one_impl(const RingSpec& spec) {
  if (spec.is_modular()) return Element::residue(1);
  if (spec.is_poly_quotient()) {
    std::vector<std::uint64_t> coeffs(spec.as_poly_quotient().degree(), 0);
    coeffs[0] = 1;
    return Element::poly(std::move(coeffs));
  }
  const auto& factors = spec.as_product().factors;
  std::vector<Element> parts(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j) parts[j] = one_impl(factors[j]);
  return Element::tuple(std::move(parts));
}

// ============================================================================
// Rendering
// ============================================================================

std::string poly_to_string(const std::vector<std::uint64_t>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const auto c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string element_to_string(const RingSpec& spec, const Element& a) {
  if (spec.is_modular()) return std::to_string(a.residue_value());
  if (spec.is_poly_quotient()) return poly_to_string(a.poly_coeffs());
  const auto& factors = spec.as_product().factors;
  std::string out = "(";
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (j > 0) out += ',';
    out += element_to_string(factors[j], a.tuple_parts()[j]);
  }
  return out + ")";
}

// ============================================================================
// Ring spec text parser
// ============================================================================

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  RingSpec parse() {
    auto spec = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "ring spec '" + std::string(s_) +
                                           "': " + what + " at position " +
                                           std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  bool starts_with(std::string_view prefix) const {
    return s_.substr(pos_, prefix.size()) == prefix;
  }

  std::uint64_t parse_number() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (value > 1000000000000000ull) fail("number too large");
      ++pos_;
    }
    return value;
  }

  RingSpec parse_expr() {
    std::vector<RingSpec> factors;
    factors.push_back(parse_atom());
    while (true) {
      skip_ws();
      if (peek() != 'x') break;
      ++pos_;
      factors.push_back(parse_atom());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return RingSpec::product(std::move(factors));
  }

  RingSpec parse_atom() {
    skip_ws();
    if (consume('(')) {
      auto spec = parse_expr();
      skip_ws();
      expect(')');
      return spec;
    }
    if (starts_with("GF")) {
      pos_ += 2;
      return parse_poly_quotient();
    }
    if (consume('Z')) return RingSpec::modular(parse_number());
    fail("expected 'Z<m>', 'GF(p)[x]/(f)' or '('");
  }

  RingSpec parse_poly_quotient() {
    skip_ws();
    expect('(');
    const auto p = parse_number();
    skip_ws();
    expect(')');
    skip_ws();
    expect('[');
    skip_ws();
    expect('x');
    skip_ws();
    expect(']');
    skip_ws();
    expect('/');
    skip_ws();
    expect('(');
    auto coeffs = parse_poly(p);
    expect(')');
    return RingSpec::poly_quotient(p, std::move(coeffs));
  }

  // Sum of terms 'c', 'x', 'cx', 'x^e', 'cx^e' joined by '+' or '-'.
  std::vector<std::uint64_t> parse_poly(std::uint64_t p) {
    if (p < 2) fail("GF base must be at least 2");
    std::map<std::size_t, std::uint64_t> terms;
    bool negative = false;
    skip_ws();
    if (consume('-')) negative = true;
    while (true) {
      const auto [exp, coeff] = parse_poly_term();
      auto& slot = terms[exp];
      const auto reduced = coeff % p;
      slot = (slot + (negative ? (p - reduced) % p : reduced)) % p;
      skip_ws();
      if (consume('+'))
        negative = false;
      else if (consume('-'))
        negative = true;
      else
        break;
    }
    std::size_t degree = 0;
    for (const auto& [exp, coeff] : terms)
      if (coeff != 0) degree = std::max(degree, exp);
    std::vector<std::uint64_t> coeffs(degree + 1, 0);
    for (const auto& [exp, coeff] : terms)
      if (coeff != 0) coeffs[exp] = coeff;
    return coeffs;
  }

  std::pair<std::size_t, std::uint64_t> parse_poly_term() {
    skip_ws();
    std::uint64_t coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_number();
      saw_coeff = true;
    }
    std::size_t exp = 0;
    if (consume('x')) {
      exp = 1;
      if (consume('^')) {
        const auto e = parse_number();
        if (e > 10000) fail("exponent too large");
        exp = static_cast<std::size_t>(e);
      }
    } else if (!saw_coeff) {
      fail("expected a polynomial term");
    }
    return {exp, coeff};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RingSpec parse_ring_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const RingSpec& spec) {
  if (spec.is_modular()) return "Z" + std::to_string(spec.as_modular().modulus);
  if (spec.is_poly_quotient()) {
    const auto& pq = spec.as_poly_quotient();
    return "GF(" + std::to_string(pq.characteristic) + ")[x]/(" +
           poly_to_string(pq.modulus) + ")";
  }
  std::string out;
  for (const auto& f : spec.as_product().factors) {
    if (!out.empty()) out += 'x';
    if (f.is_product())
      out += '(' + to_string(f) + ')';
    else
      out += to_string(f);
  }
  return out;
}

Ring::Ring(RingSpec spec, const RingOptions& options) : spec_(std::move(spec)) {
  normalize_spec(spec_);
  const auto card = cardinality_checked(spec_, options.vertex_cap);
  elements_.reserve(card);
  for (std::size_t i = 0; i < card; ++i)
    elements_.push_back(decode_element(spec_, i));
  one_index_ = encode_element(spec_, one_impl(spec_));
  name_ = ntotal::to_string(spec_);
}

const Element& Ring::element_at(std::size_t index) const {
  if (index >= elements_.size())
    throw Error(ErrorCode::InvalidArgument, "element index out of range");
  return elements_[index];
}

bool Ring::contains(const Element& a) const noexcept {
  return conforms(spec_, a);
}

std::size_t Ring::index_of(const Element& a) const {
  if (!contains(a))
    throw Error(ErrorCode::MixedRings,
                "element is not in canonical form for " + name_);
  return encode_element(spec_, a);
}

Element Ring::add(const Element& a, const Element& b) const {
  return add_impl(spec_, element_at(index_of(a)), element_at(index_of(b)));
}

Element Ring::neg(const Element& a) const {
  return neg_impl(spec_, element_at(index_of(a)));
}

Element Ring::sub(const Element& a, const Element& b) const {
  return add(a, neg(b));
}

Element Ring::mul(const Element& a, const Element& b) const {
  return mul_impl(spec_, element_at(index_of(a)), element_at(index_of(b)));
}

Element Ring::pow(const Element& a, std::uint64_t e) const {
  std::size_t result = pow_index(index_of(a), e);
  return elements_[result];
}

std::size_t Ring::add_index(std::size_t i, std::size_t j) const {
  if (spec_.is_modular())
    return (i + j) % spec_.as_modular().modulus;
  return encode_element(spec_, add_impl(spec_, element_at(i), element_at(j)));
}

std::size_t Ring::neg_index(std::size_t i) const {
  if (spec_.is_modular()) {
    const auto m = spec_.as_modular().modulus;
    return (m - i) % m;
  }
  return encode_element(spec_, neg_impl(spec_, element_at(i)));
}

std::size_t Ring::mul_index(std::size_t i, std::size_t j) const {
  if (spec_.is_modular())
    return i * j % spec_.as_modular().modulus;
  return encode_element(spec_, mul_impl(spec_, element_at(i), element_at(j)));
}

std::size_t Ring::pow_index(std::size_t i, std::uint64_t e) const {
  element_at(i);
  std::size_t result = one_index_;
  std::size_t base = i;
  while (e > 0) {
    if (e & 1) result = mul_index(result, base);
    base = mul_index(base, base);
    e >>= 1;
  }
  return result;
}

std::string Ring::to_string(const Element& a) const {
  return element_to_string(spec_, element_at(index_of(a)));
}

RingPtr make_ring(RingSpec spec, const RingOptions& options) {
  return RingPtr(new Ring(std::move(spec), options));
}

RingPtr parse_ring(std::string_view text, const RingOptions& options) {
  return make_ring(parse_ring_spec(text), options);
}

}  // namespace ntotal

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nagata {

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

bool is_prime(std::uint64_t n);

/// Runtime description of a coefficient field: QQ or GF(p).
struct FieldSpec {
  enum class Kind { Rationals, Prime };

  Kind kind = Kind::Prime;
  std::uint32_t characteristic = kDefaultCharacteristic;

  static FieldSpec rationals() { return {Kind::Rationals, 0}; }
  static FieldSpec prime(std::uint32_t p);

  /// Accepts "QQ", "GF <p>", "GF(<p>)" and "ZZ/<p>".
  static FieldSpec parse(std::string_view text);

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Z/p with p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_mpz(const mpz_class& v) const;

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t lift(Element a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  std::string to_string(Element a) const { return std::to_string(lift(a)); }
  bool equal(Element a, Element b) const { return a == b; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_mpz(const mpz_class& v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero in QQ");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return a * inv(b); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Calls `f` with a concrete field object matching `spec`.
template <class F>
decltype(auto) visit_field(const FieldSpec& spec, F&& f) {
  if (spec.kind == FieldSpec::Kind::Rationals) return f(RationalField{});
  return f(PrimeField{spec.characteristic});
}

}  // namespace nagata

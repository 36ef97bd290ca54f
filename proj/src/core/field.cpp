#include "nagata/core/field.hpp"

#include <cctype>
#include <charconv>

namespace nagata {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw std::invalid_argument("characteristic must be below 2^31");
  return {Kind::Prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "QQ" || s == "Q") return rationals();
  std::string_view digits;
  if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
    digits = std::string_view(s).substr(3, s.size() - 4);
  } else if (s.rfind("GF", 0) == 0) {
    digits = std::string_view(s).substr(2);
  } else if (s.rfind("ZZ/", 0) == 0) {
    digits = std::string_view(s).substr(3);
  } else {
    throw std::invalid_argument("unknown field '" + std::string(text) + "'");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || p > 0xffffffffu)
    throw std::invalid_argument("bad characteristic in '" + std::string(text) + "'");
  return prime(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  if (kind == Kind::Rationals) return "QQ";
  return "GF " + std::to_string(characteristic);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw std::invalid_argument("characteristic must be below 2^31");
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(p_) + ")");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

}  // namespace nagata

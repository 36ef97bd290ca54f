#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nagata {

inline constexpr int kMaxVars = 32;
inline constexpr int kMaxExponent = 127;

/// Exponent vector packed one byte per variable, variable i in byte i.
/// The top bit of every byte stays clear so divisibility can be tested
/// a word at a time.
class Monomial {
 public:
  static constexpr int kWords = 4;
  using Words = std::array<std::uint64_t, kWords>;

  Monomial() = default;
  explicit Monomial(int nvars) : nvars_(check_nvars(nvars)) {}
  Monomial(int nvars, const std::vector<int>& exps);

  static Monomial variable(int nvars, int i, int e = 1);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  int operator[](int i) const {
    return static_cast<int>((words_[i >> 3] >> ((i & 7) * 8)) & 0xff);
  }
  void set(int i, int e);
  std::vector<int> exponents() const;

  /// Variables occurring with positive exponent.
  std::vector<int> support() const;

  bool divides(const Monomial& b) const {
    constexpr std::uint64_t H = 0x8080808080808080ull;
    for (int w = 0; w < kWords; ++w)
      if ((((b.words_[w] | H) - words_[w]) & H) != H) return false;
    return true;
  }

  Monomial operator*(const Monomial& b) const;
  /// Requires this divisible by b.
  Monomial operator/(const Monomial& b) const;
  Monomial lcm(const Monomial& b) const;
  Monomial gcd(const Monomial& b) const;
  bool coprime(const Monomial& b) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t x = words_[w], y = b.words_[w];
      // byte nonzero masks
      std::uint64_t nx = ((x & 0x7f7f7f7f7f7f7f7full) + 0x7f7f7f7f7f7f7f7full) | x;
      std::uint64_t ny = ((y & 0x7f7f7f7f7f7f7f7full) + 0x7f7f7f7f7f7f7f7full) | y;
      if (nx & ny & 0x8080808080808080ull) return false;
    }
    return true;
  }

  /// Degrevlex: -1, 0, 1. Unchecked; both sides must share nvars.
  int cmp(const Monomial& b) const {
    if (degree_ != b.degree_) return degree_ < b.degree_ ? -1 : 1;
    for (int w = kWords - 1; w >= 0; --w) {
      std::uint64_t x = words_[w] ^ b.words_[w];
      if (x == 0) continue;
      int byte = (63 - std::countl_zero(x)) >> 3;
      int ea = static_cast<int>((words_[w] >> (byte * 8)) & 0xff);
      int eb = static_cast<int>((b.words_[w] >> (byte * 8)) & 0xff);
      return ea < eb ? 1 : -1;
    }
    return 0;
  }

  /// Plain lexicographic comparison of exponent vectors, x1 most significant.
  int cmp_lex(const Monomial& b) const;

  bool operator==(const Monomial& b) const { return words_ == b.words_ && nvars_ == b.nvars_; }
  bool operator<(const Monomial& b) const { return cmp(b) < 0; }

  const Words& words() const { return words_; }
  std::size_t hash() const;

  std::string to_string(const std::vector<std::string>& names) const;

  /// Same exponents in a ring with more variables.
  Monomial extend(int nvars) const;

 private:
  static std::uint8_t check_nvars(int n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("at most 32 variables are supported");
    return static_cast<std::uint8_t>(n);
  }

  Words words_{};
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

/// Degrevlex comparison with a variable-count check.
int compare_degrevlex(const Monomial& a, const Monomial& b);

/// All monomials of degree d in n variables, descending degrevlex.
std::vector<Monomial> monomials_of_degree(int n, int d);

/// The k smallest degree-two monomials in degrevlex, ascending.
std::vector<Monomial> smallest_quadratic_monomials(int n, int k);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace nagata

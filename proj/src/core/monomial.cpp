#include "nagata/core/monomial.hpp"

#include <algorithm>

namespace nagata {

Monomial::Monomial(int nvars, const std::vector<int>& exps) : nvars_(check_nvars(nvars)) {
  if (static_cast<int>(exps.size()) != nvars) throw std::invalid_argument("exponent vector length mismatch");
  for (int i = 0; i < nvars; ++i) set(i, exps[i]);
}

Monomial Monomial::variable(int nvars, int i, int e) {
  Monomial m(nvars);
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
  m.set(i, e);
  return m;
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= nvars_) throw std::out_of_range("variable index out of range");
  if (e < 0 || e > kMaxExponent) throw std::overflow_error("exponent out of range (max 127)");
  int old = (*this)[i];
  int shift = (i & 7) * 8;
  words_[i >> 3] &= ~(0xffull << shift);
  words_[i >> 3] |= static_cast<std::uint64_t>(e) << shift;
  degree_ = static_cast<std::uint16_t>(degree_ - old + e);
}

std::vector<int> Monomial::exponents() const {
  std::vector<int> e(nvars_);
  for (int i = 0; i < nvars_; ++i) e[i] = (*this)[i];
  return e;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < nvars_; ++i)
    if ((*this)[i] != 0) s.push_back(i);
  return s;
}

Monomial Monomial::operator*(const Monomial& b) const {
  Monomial r(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    int e = (*this)[i] + b[i];
    if (e > kMaxExponent) throw std::overflow_error("exponent out of range (max 127)");
  }
  for (int w = 0; w < kWords; ++w) r.words_[w] = words_[w] + b.words_[w];
  r.degree_ = static_cast<std::uint16_t>(degree_ + b.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& b) const {
  if (!b.divides(*this)) throw std::invalid_argument("monomial division is not exact");
  Monomial r(nvars_);
  for (int w = 0; w < kWords; ++w) r.words_[w] = words_[w] - b.words_[w];
  r.degree_ = static_cast<std::uint16_t>(degree_ - b.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& b) const {
  Monomial r(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    int e = std::max((*this)[i], b[i]);
    if (e) r.set(i, e);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& b) const {
  Monomial r(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    int e = std::min((*this)[i], b[i]);
    if (e) r.set(i, e);
  }
  return r;
}

int Monomial::cmp_lex(const Monomial& b) const {
  for (int i = 0; i < nvars_; ++i) {
    int x = (*this)[i], y = b[i];
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (degree_ == 0) return "1";
  std::string s;
  for (int i = 0; i < nvars_; ++i) {
    int e = (*this)[i];
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += names.at(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Monomial Monomial::extend(int nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot shrink a monomial");
  Monomial r(nvars);
  r.words_ = words_;
  r.degree_ = degree_;
  return r;
}

int compare_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("ring mismatch: monomials have different variable counts");
  return a.cmp(b);
}

namespace {
void enumerate(int n, int d, int var, std::vector<int>& e, std::vector<Monomial>& out) {
  if (var == n - 1) {
    e[var] = d;
    out.emplace_back(n, e);
    e[var] = 0;
    return;
  }
  for (int k = d; k >= 0; --k) {
    e[var] = k;
    enumerate(n, d - k, var + 1, e, out);
  }
  e[var] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> e(n, 0);
  enumerate(n, d, 0, e, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
  return out;
}

std::vector<Monomial> smallest_quadratic_monomials(int n, int k) {
  auto all = monomials_of_degree(n, 2);
  if (k < 0 || k > static_cast<int>(all.size())) throw std::invalid_argument("not that many quadratic monomials");
  std::reverse(all.begin(), all.end());
  all.resize(k);
  return all;
}

}  // namespace nagata

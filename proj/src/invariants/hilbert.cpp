#include "nagata/invariants/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace nagata {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Hilbert series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Hilbert series coefficient overflow");
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.cmp(b) < 0;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& m : out)
      if (m.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

IntPoly numerator_rec(std::vector<Monomial> gens, int n) {
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {0};
  // pairwise coprime generators: product of (1 - t^deg)
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  if (coprime) {
    IntPoly r{1};
    for (const auto& g : gens) {
      IntPoly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] = -1;
      r = intpoly_mul(r, f);
    }
    return r;
  }
  // pivot on the variable occurring in the most non-linear generators
  std::vector<int> count(n, 0);
  for (const auto& g : gens)
    if (g.degree() > 1)
      for (int v : g.support()) count[v]++;
  int var = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial x = Monomial::variable(n, var);

  std::vector<Monomial> plus = gens;
  plus.push_back(x);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g[var] > 0 ? g / x : g);
  IntPoly a = numerator_rec(minimalize(plus), n);
  IntPoly b = numerator_rec(minimalize(colon), n);
  b.insert(b.begin(), 0);
  return intpoly_add(a, b);
}

bool avoids(const std::vector<std::uint64_t>& supports, std::uint64_t chosen) {
  for (auto s : supports)
    if ((s & ~chosen) == 0) return false;
  return true;
}

int dim_dfs(const std::vector<std::uint64_t>& supports, int n, int var, std::uint64_t chosen, int size, int best) {
  if (size + (n - var) <= best) return best;
  if (var == n) return std::max(best, size);
  std::uint64_t with = chosen | (1ull << var);
  if (avoids(supports, with)) best = dim_dfs(supports, n, var + 1, with, size + 1, best);
  return dim_dfs(supports, n, var + 1, chosen, size, best);
}

}  // namespace

void intpoly_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly intpoly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
  intpoly_trim(r);
  return r;
}

IntPoly intpoly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly nb = b;
  for (auto& c : nb) c = checked_mul(c, -1);
  return intpoly_add(a, nb);
}

IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  intpoly_trim(r);
  return r;
}

bool intpoly_divisible_by_one_minus_t(const IntPoly& a) { return intpoly_eval_one(a) == 0; }

std::int64_t intpoly_eval_one(const IntPoly& a) {
  std::int64_t s = 0;
  for (auto c : a) s = checked_add(s, c);
  return s;
}

IntPoly intpoly_div_one_minus_t(const IntPoly& a) {
  if (!intpoly_divisible_by_one_minus_t(a)) throw std::invalid_argument("polynomial is not divisible by 1 - t");
  if (a.empty()) return {};
  // a = (1 - t) q  =>  q_i = sum_{k <= i} a_k
  IntPoly q(a.size() - 1, 0);
  std::int64_t s = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    s = checked_add(s, a[i]);
    q[i] = s;
  }
  intpoly_trim(q);
  return q;
}

std::string intpoly_to_string(const IntPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::int64_t c = a[i];
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::int64_t m = c < 0 ? -c : c;
    if (i == 0 || m != 1) s += std::to_string(m);
    if (i > 0) s += var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

IntPoly hilbert_numerator(const std::vector<Monomial>& gens, int n) {
  for (const auto& g : gens)
    if (g.nvars() != n) throw std::invalid_argument("ring mismatch in hilbert_numerator");
  return numerator_rec(minimalize(gens), n);
}

int monomial_krull_dim(const std::vector<Monomial>& gens, int n) {
  std::vector<std::uint64_t> supports;
  for (const auto& g : minimalize(gens)) {
    std::uint64_t s = 0;
    for (int v : g.support()) s |= 1ull << v;
    if (s == 0) return -1;  // unit ideal
    supports.push_back(s);
  }
  return dim_dfs(supports, n, 0, 0, 0, -1);
}

std::vector<std::int64_t> HilbertData::hilbert_function(int dmax) const {
  // coefficients of h(t) / (1-t)^dim
  std::vector<std::int64_t> f(dmax + 1, 0);
  for (std::size_t i = 0; i < h.size() && static_cast<int>(i) <= dmax; ++i) f[i] = h[i];
  for (int k = 0; k < dim; ++k)
    for (int d = 1; d <= dmax; ++d) f[d] = checked_add(f[d], f[d - 1]);
  return f;
}

HilbertData hilbert_series(const std::vector<Monomial>& initial_ideal, int n) {
  HilbertData hd;
  hd.nvars = n;
  hd.numerator = hilbert_numerator(initial_ideal, n);
  hd.dim = monomial_krull_dim(initial_ideal, n);
  if (hd.dim < 0) throw std::invalid_argument("hilbert_series of the unit ideal");
  IntPoly h = hd.numerator;
  for (int k = 0; k < n - hd.dim; ++k) h = intpoly_div_one_minus_t(h);
  if (intpoly_divisible_by_one_minus_t(h))
    throw std::logic_error("Krull dimension disagrees with the Hilbert series pole order");
  hd.h = h;
  hd.a_invariant = static_cast<int>(h.size()) - 1 - hd.dim;
  return hd;
}

}  // namespace nagata

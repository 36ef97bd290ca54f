#include "nagata/koszul/koszul.hpp"

#include <set>
#include <stdexcept>

namespace nagata {

std::string SeriesTrunc::to_string() const {
  std::string out;
  for (int i = 0; i <= N; ++i) {
    if (coeffs[i].empty()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + intpoly_to_string(coeffs[i], "s") + ")";
    if (i > 0) out += i > 1 ? "t^" + std::to_string(i) : "t";
  }
  return out.empty() ? "0" : out;
}

SeriesTrunc series_from_betti(const BettiTable& b, int N) {
  SeriesTrunc p = SeriesTrunc::zero(N);
  for (const auto& [key, v] : b.entries()) {
    auto [i, j] = key;
    if (i > N) continue;
    IntPoly mono(j + 1, 0);
    mono[j] = v;
    p.coeffs[i] = intpoly_add(p.coeffs[i], mono);
  }
  return p;
}

std::vector<std::pair<int, int>> off_diagonal_support(const SeriesTrunc& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= p.N; ++i)
    for (int j = 0; j < static_cast<int>(p.coeffs[i].size()); ++j)
      if (j != i && p.coeffs[i][j] != 0) out.emplace_back(i, j);
  return out;
}

std::vector<mpz_class> froberg_series(const HilbertData& h, int N) {
  if (h.h.empty() || h.h[0] != 1) throw std::invalid_argument("froberg_series needs h_0 = 1");
  // numerator (1+t)^dim, denominator h(-t)
  std::vector<mpz_class> num(N + 1, 0);
  num[0] = 1;
  for (int k = 0; k < h.dim; ++k)
    for (int i = N; i >= 1; --i) num[i] += num[i - 1];
  std::vector<mpz_class> den(h.h.size());
  for (std::size_t i = 0; i < h.h.size(); ++i) den[i] = (i % 2 ? -1 : 1) * mpz_class(static_cast<long>(h.h[i]));
  std::vector<mpz_class> a(N + 1, 0);
  for (int k = 0; k <= N; ++k) {
    mpz_class s = num[k];
    for (int i = 1; i < static_cast<int>(den.size()) && i <= k; ++i) s -= den[i] * a[k - i];
    a[k] = s;
  }
  return a;
}

std::optional<int> froberg_test(const HilbertData& h, int N) {
  auto a = froberg_series(h, N);
  for (int k = 0; k <= N; ++k)
    if (a[k] < 0) return k;
  return std::nullopt;
}

namespace {

void check_bounds(const SeriesTrunc& a, const SeriesTrunc& b) {
  if (a.N != b.N) throw std::invalid_argument("series truncated at different bounds");
}

IntPoly convolution_tail(const std::vector<IntPoly>& f, const SeriesTrunc& g, int i) {
  IntPoly acc;
  for (int j = 1; j <= i; ++j) acc = intpoly_add(acc, intpoly_mul(f[i - j], g.coeffs[j - 1]));
  return acc;
}

}  // namespace

SeriesTrunc gulliksen_combine(const SeriesTrunc& P_R, const SeriesTrunc& P_M) {
  check_bounds(P_R, P_M);
  SeriesTrunc f = SeriesTrunc::zero(P_R.N);
  for (int i = 0; i <= P_R.N; ++i) f.coeffs[i] = intpoly_add(P_R.coeffs[i], convolution_tail(f.coeffs, P_M, i));
  return f;
}

bool propagation_check(const SeriesTrunc& P_R, const SeriesTrunc& P_M, const SeriesTrunc& P_combined) {
  check_bounds(P_R, P_M);
  check_bounds(P_R, P_combined);
  for (int i = 0; i <= P_R.N; ++i) {
    IntPoly h = intpoly_sub(P_combined.coeffs[i], convolution_tail(P_combined.coeffs, P_M, i));
    IntPoly want = P_R.coeffs[i];
    intpoly_trim(want);
    if (h != want) return false;
    for (std::size_t j = 0; j < want.size(); ++j)
      if (want[j] != 0 && (j >= P_combined.coeffs[i].size() || P_combined.coeffs[i][j] == 0)) return false;
  }
  return true;
}

const char* to_string(KoszulKind k) {
  switch (k) {
    case KoszulKind::KoszulThroughN: return "koszul-through-N";
    case KoszulKind::NonKoszulWitness: return "non-koszul-witness";
    default: return "inconclusive";
  }
}

}  // namespace nagata

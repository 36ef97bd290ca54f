#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "nagata/invariants/hilbert.hpp"
#include "nagata/koszul/algebra.hpp"
#include "nagata/resolutions/resolution.hpp"

namespace nagata {

/// P(s,t) truncated at t^N: coeffs[i] is the polynomial in s multiplying t^i.
struct SeriesTrunc {
  int N = 0;
  std::vector<IntPoly> coeffs;

  static SeriesTrunc zero(int N) { return {N, std::vector<IntPoly>(N + 1)}; }
  std::int64_t at(int i, int j) const {
    if (i < 0 || i > N || j < 0 || j >= static_cast<int>(coeffs[i].size())) return 0;
    return coeffs[i][j];
  }
  bool operator==(const SeriesTrunc&) const = default;
  std::string to_string() const;
};

/// sum_{i <= N} sum_j beta_{i,j} s^j t^i. The table must be known for every i <= N.
SeriesTrunc series_from_betti(const BettiTable& b, int N);

/// Positions (i, j) with j != i and a nonzero coefficient.
std::vector<std::pair<int, int>> off_diagonal_support(const SeriesTrunc& p);

/// Coefficients of 1/H_R(-t) through t^N, from H = h(t)/(1-t)^dim.
std::vector<mpz_class> froberg_series(const HilbertData& h, int N);

/// First degree <= N where 1/H_R(-t) has a negative coefficient; a Koszul ring has none.
std::optional<int> froberg_test(const HilbertData& h, int N);

/// P_R / (1 - t P_M) through t^N: f_i = h_i + sum_{j=1}^{i} f_{i-j} g_{j-1}.
SeriesTrunc gulliksen_combine(const SeriesTrunc& P_R, const SeriesTrunc& P_M);

/// Checks h_i = f_i - sum_j f_{i-j} g_{j-1} and supp h_i within supp f_i for every i <= N.
bool propagation_check(const SeriesTrunc& P_R, const SeriesTrunc& P_M, const SeriesTrunc& P_combined);

enum class KoszulKind { KoszulThroughN, NonKoszulWitness, Inconclusive };

const char* to_string(KoszulKind k);

struct KoszulVerdict {
  int N = 0;
  int jmax = 0;
  BettiTable table;
  KoszulKind kind = KoszulKind::Inconclusive;
  std::optional<std::pair<int, int>> witness;  // unset when only the Froberg series certifies
  std::optional<int> froberg_witness;
  std::string reason;
};

/// beta^R_{i,j}(k) = 0 for j > (d-1)(i-1) + 1 when R has a Groebner basis in degrees <= d.
inline int backelin_bound(int gb_degree, int i) { return i <= 1 ? i : (gb_degree - 1) * (i - 1) + 1; }

/// Cheapest certificate first: generator degrees, then the Froberg series, then
/// beta^R(k) for i <= N and j <= jmax. With `always_resolve` the table is computed
/// even when the Froberg series already settles the question.
template <class K>
KoszulVerdict koszul_probe(const RingPresentation<K>& R, int N, int jmax, const Limits& limits = {},
                           bool always_resolve = false) {
  KoszulVerdict v;
  v.N = N;
  v.jmax = jmax;
  auto G = buchberger(R, -1, limits);
  auto hd = hilbert_series(G.leads(), R.nvars());
  v.froberg_witness = froberg_test(hd, std::max(2 * N, 64));
  v.table.bound(N, jmax);
  for (const auto& g : minimalize_ideal(R.ring, R.generators))
    if (g.degree() > 2) {
      // a minimal generator of degree d > 2 gives beta_{2,d}(k) != 0
      v.kind = KoszulKind::NonKoszulWitness;
      v.witness = std::make_pair(2, g.degree());
      v.reason = "minimal generator of degree " + std::to_string(g.degree());
      return v;
    }
  if (v.froberg_witness && !always_resolve) {
    v.kind = KoszulKind::NonKoszulWitness;
    v.reason = "negative coefficient of 1/H(-t) in degree " + std::to_string(*v.froberg_witness);
    return v;
  }
  v.table = resolve_k_over_quotient(R, N, jmax, limits);
  for (const auto& [key, val] : v.table.entries())
    if (key.first != key.second && val > 0) {
      v.kind = KoszulKind::NonKoszulWitness;
      v.witness = key;
      v.reason = "off-diagonal Betti number of the residue field";
      return v;
    }
  int d = 1;
  for (const auto& g : G.elements) d = std::max(d, g.degree());
  if (jmax >= backelin_bound(d, N)) {
    v.kind = KoszulKind::KoszulThroughN;
    v.reason = "linear through homological degree " + std::to_string(N);
  } else {
    v.kind = KoszulKind::Inconclusive;
    v.reason = "no off-diagonal entry up to jmax, but the Groebner degree bound needs jmax >= " +
               std::to_string(backelin_bound(d, N));
  }
  return v;
}

}  // namespace nagata

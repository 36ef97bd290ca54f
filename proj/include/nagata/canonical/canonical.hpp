#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "nagata/invariants/invariants.hpp"

namespace nagata {

/// coker(phi: F1 -> F0) over S.
template <class K>
struct ModulePresentation {
  PolyRing<K> ring;
  GradedFreeModule F0, F1;
  GradedMatrix<K> phi;

  explicit ModulePresentation(PolyRing<K> r) : ring(std::move(r)) {}

  int num_generators() const { return F0.rank(); }
};

/// Presentation of omega_R = Ext^c_S(R, S)(-n) from the minimal resolution:
/// the transpose of the last differential. Requires pd = codim.
template <class K>
ModulePresentation<K> canonical_module(const PolyRing<K>& ring, const FreeResolution<K>& res, int codim) {
  int nvars = ring.nvars();
  if (!res.minimal) throw std::invalid_argument("canonical_module needs a minimal resolution");
  if (res.length() != codim) throw std::invalid_argument("canonical_module needs a Cohen-Macaulay ring (pd = codim)");
  ModulePresentation<K> m(ring);
  if (codim == 0) {
    // R = S: omega_S = S(-n), no relations
    m.F0 = GradedFreeModule{{nvars}};
    m.F1 = GradedFreeModule{};
    m.phi = GradedMatrix<K>(m.F1, m.F0);
    return m;
  }
  m.phi = res.differentials[codim - 1].transpose(nvars);
  m.F0 = m.phi.target();
  m.F1 = m.phi.source();
  return m;
}

/// The same module with every twist raised by `shift`, i.e. M(-shift).
template <class K>
ModulePresentation<K> shift_module(const ModulePresentation<K>& m, int shift) {
  ModulePresentation<K> out(m.ring);
  for (int t : m.F0.twists) out.F0.twists.push_back(t + shift);
  for (int t : m.F1.twists) out.F1.twists.push_back(t + shift);
  out.phi = GradedMatrix<K>(out.F1, out.F0);
  for (int c = 0; c < m.phi.cols(); ++c)
    for (const auto& [r, p] : m.phi.column(c)) out.phi.set(r, c, p);
  return out;
}

/// omega = omega_R(-a-1), whose generators sit in degree 1 when R is level.
template <class K>
ModulePresentation<K> shifted_omega(const ModulePresentation<K>& omega_R, int a_invariant) {
  return shift_module(omega_R, a_invariant + 1);
}

/// Numerator of the Hilbert series of omega_R(-shift) over (1-t)^n:
/// sum_i (-1)^(c-i) sum_j beta_{i,j} t^(n-j+shift).
inline IntPoly canonical_numerator(const BettiTable& b, int nvars, int codim, int shift = 0) {
  IntPoly k(1, 0);
  for (const auto& [key, v] : b.entries()) {
    auto [i, j] = key;
    int e = nvars - j + shift;
    if (e < 0) throw std::invalid_argument("canonical_numerator: negative exponent");
    if (static_cast<int>(k.size()) <= e) k.resize(e + 1, 0);
    k[e] += ((codim - i) % 2 ? -1 : 1) * v;
  }
  intpoly_trim(k);
  return k;
}

/// Fresh variable names `prefix1..prefixt` that avoid `taken`.
inline std::vector<std::string> fresh_names(const std::vector<std::string>& taken, const std::string& prefix, int t) {
  std::set<std::string> used(taken.begin(), taken.end());
  std::string p = prefix;
  for (;;) {
    bool clash = false;
    for (int i = 1; i <= t && !clash; ++i) clash = used.count(p + std::to_string(i)) > 0;
    if (!clash) break;
    p += "_";
  }
  std::vector<std::string> out;
  for (int i = 1; i <= t; ++i) out.push_back(p + std::to_string(i));
  return out;
}

/// Embeds polynomials into a ring with more variables appended at the end.
template <class K>
Polynomial<K> extend_poly(const PolyRing<K>& target, const Polynomial<K>& p, int offset = 0) {
  std::vector<Term<K>> ts;
  for (const auto& t : p.terms()) {
    std::vector<int> e(target.nvars(), 0);
    for (int i = 0; i < t.mono.nvars(); ++i) e[offset + i] = t.mono[i];
    ts.push_back({Monomial(target.nvars(), e), t.coeff});
  }
  return target.from_terms(std::move(ts));
}

/// Monic, deduplicated, sorted by degree and then by descending lead.
template <class K>
std::vector<Polynomial<K>> canonical_generators(const PolyRing<K>& ring, std::vector<Polynomial<K>> gens) {
  std::vector<Polynomial<K>> out;
  for (auto& g : gens)
    if (!g.is_zero()) out.push_back(ring.monic(g));
  std::sort(out.begin(), out.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
      if (ta[i].mono != tb[i].mono) return tb[i].mono < ta[i].mono;
    }
    return ta.size() < tb.size();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Everything downstream needs about one ring: its Groebner basis, minimal
/// resolution and invariants.
template <class K>
struct Analysis {
  RingPresentation<K> R;
  GroebnerBasis<K> G;
  FreeResolution<K> resolution;
  InvariantReport report;
};

template <class K>
Analysis<K> analyze(const RingPresentation<K>& R, const Limits& limits = {}) {
  auto G = buchberger(R, -1, limits);
  auto res = resolve_over_poly(R, limits);
  auto rep = basic_invariants(R, G, betti_table(res));
  if (rep.cohen_macaulay && rep.level && !rep.gorenstein) {
    auto omega = canonical_module(R.ring, res, rep.codim);
    rep.superlevel = is_superlevel(R.ring, G, omega.phi, limits);
  } else if (!rep.level) {
    rep.superlevel = false;
  }
  return {R, std::move(G), std::move(res), std::move(rep)};
}

template <class K>
struct IdealizationResult {
  RingPresentation<K> presentation;
  int t = 0;                 // type of R, the number of new variables
  int num_square_block = 0;  // t(t+1)/2
  int num_linear_block = 0;
  std::vector<std::string> new_variables;
  std::string source;
  IntPoly expected_numerator;  // (K_R + t^(a+1) K_omega_R) (1-t)^t
};

/// Presentation of R x omega as S[y_1..y_t]/(I + (y)^2 + (sum_i phi_{i,c} y_i)).
/// Throws if the Hilbert series of the result is not H_R + t H_omega.
template <class K>
IdealizationResult<K> idealize(const Analysis<K>& A, const std::string& source = "") {
  const auto& R = A.R;
  const auto& rep = A.report;
  if (!rep.cohen_macaulay) throw std::invalid_argument("idealize needs a Cohen-Macaulay ring");
  if (!rep.level) throw std::invalid_argument("idealize needs a level ring: the idealization would not be standard graded");
  auto omega_R = canonical_module(R.ring, A.resolution, rep.codim);
  auto omega = shifted_omega(omega_R, rep.a_invariant);
  for (int d : omega.F0.twists)
    if (d != 1) throw std::logic_error("shifted canonical module has a generator outside degree 1");
  int t = omega.F0.rank();
  int n = R.nvars();
  auto ynames = fresh_names(R.ring.names(), "y", t);
  std::vector<std::string> names = R.ring.names();
  names.insert(names.end(), ynames.begin(), ynames.end());
  PolyRing<K> ring(R.ring.field(), names);

  std::vector<Polynomial<K>> base, squares, linear;
  for (const auto& g : R.generators) base.push_back(extend_poly(ring, g));
  for (int i = 0; i < t; ++i)
    for (int j = i; j < t; ++j) squares.push_back(ring.mul(ring.var(n + i), ring.var(n + j)));
  for (int c = 0; c < omega.phi.cols(); ++c) {
    Polynomial<K> l;
    for (const auto& [r, p] : omega.phi.column(c)) {
      auto f = normal_form(R.ring, p, A.G);
      l = ring.add(l, ring.mul(extend_poly(ring, f), ring.var(n + r)));
    }
    if (!l.is_zero()) linear.push_back(l);
  }
  base = canonical_generators(ring, base);
  squares = canonical_generators(ring, squares);
  linear = canonical_generators(ring, linear);

  IdealizationResult<K> out{RingPresentation<K>(ring, {}), t, static_cast<int>(squares.size()),
                            static_cast<int>(linear.size()), ynames, source, {}};
  std::vector<Polynomial<K>> gens = squares;
  gens.insert(gens.end(), linear.begin(), linear.end());
  gens.insert(gens.end(), base.begin(), base.end());
  out.presentation = RingPresentation<K>(ring, canonical_generators(ring, gens));

  IntPoly total = intpoly_add(rep.hilbert.numerator, canonical_numerator(rep.betti, n, rep.codim, rep.a_invariant + 1));
  for (int i = 0; i < t; ++i) total = intpoly_mul(total, IntPoly{1, -1});
  out.expected_numerator = total;

  auto G = buchberger(out.presentation);
  if (hilbert_numerator(G.leads(), ring.nvars()) != total)
    throw std::logic_error("idealization has the wrong Hilbert series");
  return out;
}

/// A tensor B over k: variables of B renamed on clash, ideal I_A + I_B.
template <class K>
RingPresentation<K> tensor_product(const RingPresentation<K>& A, const RingPresentation<K>& B) {
  if (!(A.ring.field().spec() == B.ring.field().spec())) throw std::invalid_argument("tensor_product over different fields");
  std::vector<std::string> names = A.ring.names();
  std::set<std::string> used(names.begin(), names.end());
  for (const auto& b : B.ring.names()) {
    std::string nm = b;
    while (used.count(nm)) nm += "_b";
    used.insert(nm);
    names.push_back(nm);
  }
  PolyRing<K> ring(A.ring.field(), names);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : A.generators) gens.push_back(extend_poly(ring, g, 0));
  for (const auto& g : B.generators) gens.push_back(extend_poly(ring, g, A.nvars()));
  return RingPresentation<K>(ring, gens);
}

/// Mutual containment of two ideals in the same ring.
template <class K>
bool same_ideal(const PolyRing<K>& ring, const std::vector<Polynomial<K>>& a, const std::vector<Polynomial<K>>& b) {
  auto Ga = buchberger(ring, a);
  auto Gb = buchberger(ring, b);
  for (const auto& f : a)
    if (!ideal_contains(ring, Gb, f)) return false;
  for (const auto& f : b)
    if (!ideal_contains(ring, Ga, f)) return false;
  return true;
}

}  // namespace nagata

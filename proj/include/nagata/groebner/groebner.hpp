#pragma once

#include <string>
#include <vector>

#include "nagata/core/graded_matrix.hpp"
#include "nagata/core/parse.hpp"
#include "nagata/groebner/module_gb.hpp"

namespace nagata {

/// R = S/I with I given by homogeneous generators of positive degree.
template <class K>
struct RingPresentation {
  PolyRing<K> ring;
  std::vector<Polynomial<K>> generators;

  RingPresentation(PolyRing<K> r, std::vector<Polynomial<K>> gens) : ring(std::move(r)), generators(std::move(gens)) {
    for (const auto& g : generators) {
      ring.check(g);
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) throw std::invalid_argument("generator '" + ring.to_string(g) + "' is not homogeneous");
      if (g.degree() < 1) throw std::invalid_argument("generators must have positive degree");
    }
  }

  /// Parses generator strings over the given ring.
  static RingPresentation parse(PolyRing<K> r, const std::vector<std::string>& gens) {
    std::vector<Polynomial<K>> ps;
    int line = 1;
    for (const auto& s : gens) ps.push_back(parse_polynomial(r, s, line++));
    return RingPresentation(std::move(r), std::move(ps));
  }

  int nvars() const { return ring.nvars(); }
};

template <class K>
struct GroebnerBasis {
  std::vector<Polynomial<K>> elements;        // reduced, monic, ascending by lead
  std::vector<Polynomial<K>> minimal_generators;  // a minimal generating set of the ideal
  int truncated_at = -1;                      // -1 when complete

  bool complete() const { return truncated_at < 0; }
  std::vector<Monomial> leads() const {
    std::vector<Monomial> out;
    for (const auto& g : elements) out.push_back(g.lead_monomial());
    return out;
  }
};

template <class K>
ModuleVector<K> to_module_vector(const Polynomial<K>& p, int comp = 0) {
  ModuleVector<K> v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.mono, comp, t.coeff});
  return v;
}

template <class K>
Polynomial<K> from_module_vector(const ModuleVector<K>& v) {
  std::vector<Term<K>> ts;
  ts.reserve(v.size());
  for (const auto& t : v) ts.push_back({t.mono, t.coeff});
  return Polynomial<K>(std::move(ts));
}

/// Reduced Groebner basis in degrevlex. Throws on inhomogeneous input.
template <class K>
GroebnerBasis<K> buchberger(const PolyRing<K>& ring, const std::vector<Polynomial<K>>& gens, int max_degree = -1,
                            const Limits& limits = {}) {
  std::vector<ModuleInput<K>> inputs;
  for (const auto& g : gens) {
    ring.check(g);
    if (!g.is_homogeneous()) throw std::invalid_argument("inhomogeneous generator '" + ring.to_string(g) + "'");
    inputs.push_back({to_module_vector(g), InputRole::Candidate});
  }
  ModuleGB<K> engine(ring, ModuleOrder::uniform({0}), limits);
  auto res = engine.run(inputs, max_degree);
  GroebnerBasis<K> gb;
  for (const auto& v : res.basis) gb.elements.push_back(from_module_vector(v));
  std::sort(gb.elements.begin(), gb.elements.end(),
            [](const Polynomial<K>& a, const Polynomial<K>& b) { return a.lead_monomial() < b.lead_monomial(); });
  std::vector<int> idx = res.minimal;
  std::sort(idx.begin(), idx.end());
  for (int i : idx) gb.minimal_generators.push_back(gens[i]);
  gb.truncated_at = res.truncated_at;
  return gb;
}

template <class K>
GroebnerBasis<K> buchberger(const RingPresentation<K>& p, int max_degree = -1, const Limits& limits = {}) {
  return buchberger(p.ring, p.generators, max_degree, limits);
}

/// Remainder of f modulo G; ties go to the first element of G.
template <class K>
Polynomial<K> normal_form(const PolyRing<K>& ring, const Polynomial<K>& f, const GroebnerBasis<K>& G) {
  ring.check(f);
  if (f.is_zero()) return f;
  const K& F = ring.field();
  std::vector<Term<K>> out;
  std::map<Monomial, typename K::Element, std::function<bool(const Monomial&, const Monomial&)>> acc(
      [](const Monomial& a, const Monomial& b) { return b < a; });
  for (const auto& t : f.terms()) acc[t.mono] = t.coeff;
  while (!acc.empty()) {
    auto it = acc.begin();
    Monomial m = it->first;
    auto c = it->second;
    acc.erase(it);
    if (F.is_zero(c)) continue;
    const Polynomial<K>* div = nullptr;
    for (const auto& g : G.elements)
      if (g.lead_monomial().divides(m)) {
        div = &g;
        break;
      }
    if (!div) {
      out.push_back({m, c});
      continue;
    }
    Monomial q = m / div->lead_monomial();
    auto factor = F.div(c, div->lead().coeff);
    for (std::size_t i = 1; i < div->size(); ++i) {
      const auto& t = div->terms()[i];
      auto& slot = acc.try_emplace(t.mono * q, F.zero()).first->second;
      slot = F.sub(slot, F.mul(factor, t.coeff));
    }
  }
  return Polynomial<K>(std::move(out));
}

template <class K>
bool ideal_contains(const PolyRing<K>& ring, const GroebnerBasis<K>& G, const Polynomial<K>& f) {
  return normal_form(ring, f, G).is_zero();
}

/// True iff the minimal generators contain no linear forms.
template <class K>
bool is_nondegenerate(const GroebnerBasis<K>& G) {
  for (const auto& g : G.minimal_generators)
    if (g.degree() <= 1) return false;
  return true;
}

namespace detail {

template <class K>
ModuleVector<K> column_vector(const GradedMatrix<K>& M, int c, int comp_offset = 0) {
  ModuleVector<K> v;
  for (const auto& [r, p] : M.column(c))
    for (const auto& t : p.terms()) v.push_back({t.mono, r + comp_offset, t.coeff});
  return v;
}

/// Minimal generators among `candidates` of the submodule of S^F they span
/// together with `background`; returns indices into `candidates`.
template <class K>
std::vector<int> minimal_subset(const PolyRing<K>& ring, const std::vector<int>& twists,
                                const std::vector<ModuleVector<K>>& background,
                                const std::vector<ModuleVector<K>>& candidates, const Limits& limits) {
  ModuleGB<K> engine(ring, ModuleOrder::uniform(twists), limits);
  std::vector<ModuleInput<K>> inputs;
  for (auto v : candidates) {
    engine.sort_terms(v);
    inputs.push_back({std::move(v), InputRole::Candidate});
  }
  for (auto v : background) {
    engine.sort_terms(v);
    inputs.push_back({std::move(v), InputRole::Background});
  }
  auto res = engine.run(inputs);
  std::sort(res.minimal.begin(), res.minimal.end());
  return res.minimal;
}

template <class K>
GradedMatrix<K> columns_to_matrix(const PolyRing<K>& ring, const GradedFreeModule& target,
                                  const std::vector<ModuleVector<K>>& cols, const std::vector<int>& pick) {
  GradedFreeModule src;
  std::vector<std::map<int, std::vector<Term<K>>>> entries;
  for (int i : pick) {
    const auto& v = cols[i];
    src.twists.push_back(v.front().mono.degree() + target.twists[v.front().comp]);
    std::map<int, std::vector<Term<K>>> col;
    for (const auto& t : v) col[t.comp].push_back({t.mono, t.coeff});
    entries.push_back(std::move(col));
  }
  // order columns by degree, keeping the given order inside a degree
  std::vector<int> perm(pick.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return src.twists[a] < src.twists[b]; });
  GradedFreeModule sorted;
  for (int i : perm) sorted.twists.push_back(src.twists[i]);
  GradedMatrix<K> out(sorted, target);
  for (std::size_t c = 0; c < perm.size(); ++c)
    for (auto& [r, ts] : entries[perm[c]]) out.set(r, static_cast<int>(c), ring.from_terms(ts));
  return out;
}

/// Kernel of [M | extra] over S, projected to the first M.cols() coordinates.
template <class K>
std::vector<ModuleVector<K>> raw_syzygies(const PolyRing<K>& ring, const GradedMatrix<K>& M,
                                          const std::vector<ModuleVector<K>>& extra, const std::vector<int>& extra_twists,
                                          int max_degree, const Limits& limits, int* truncated) {
  int m = M.rows(), k = M.cols(), e = static_cast<int>(extra.size());
  ModuleOrder order;
  for (int r = 0; r < m; ++r) {
    order.twists.push_back(M.target().twists[r]);
    order.blocks.push_back(1);
  }
  for (int c = 0; c < k; ++c) {
    order.twists.push_back(M.source().twists[c]);
    order.blocks.push_back(0);
  }
  for (int c = 0; c < e; ++c) {
    order.twists.push_back(extra_twists[c]);
    order.blocks.push_back(0);
  }
  ModuleGB<K> engine(ring, order, limits);
  std::vector<ModuleInput<K>> inputs;
  Monomial one(ring.nvars());
  for (int c = 0; c < k; ++c) {
    auto v = column_vector(M, c);
    v.push_back({one, m + c, ring.field().one()});
    engine.sort_terms(v);
    inputs.push_back({std::move(v), InputRole::Plain});
  }
  for (int c = 0; c < e; ++c) {
    auto v = extra[c];
    v.push_back({one, m + k + c, ring.field().one()});
    engine.sort_terms(v);
    inputs.push_back({std::move(v), InputRole::Plain});
  }
  auto res = engine.run(inputs, max_degree);
  if (truncated) *truncated = res.truncated_at;
  std::vector<ModuleVector<K>> out;
  for (const auto& v : res.basis) {
    if (v.front().comp < m) continue;
    ModuleVector<K> proj;
    for (const auto& t : v)
      if (t.comp >= m && t.comp < m + k) proj.push_back({t.mono, t.comp - m, t.coeff});
    if (!proj.empty()) out.push_back(std::move(proj));
  }
  return out;
}

}  // namespace detail

/// Minimal generators of ker M over S, as the columns of a matrix into M.source().
template <class K>
GradedMatrix<K> syzygies(const PolyRing<K>& ring, const GradedMatrix<K>& M, const Limits& limits = {}) {
  auto raw = detail::raw_syzygies<K>(ring, M, {}, {}, -1, limits, nullptr);
  auto pick = detail::minimal_subset<K>(ring, M.source().twists, {}, raw, limits);
  return detail::columns_to_matrix(ring, M.source(), raw, pick);
}

/// Minimal generators of ker M over R = S/I, entries in normal form modulo I.
/// With max_degree >= 0 only syzygies of degree <= max_degree are produced.
template <class K>
GradedMatrix<K> syzygies_over_quotient(const PolyRing<K>& ring, const GradedMatrix<K>& M, const GroebnerBasis<K>& I,
                                       int max_degree = -1, const Limits& limits = {}) {
  std::vector<ModuleVector<K>> extra;
  std::vector<int> extra_twists;
  for (int r = 0; r < M.rows(); ++r)
    for (const auto& g : I.elements) {
      extra.push_back(to_module_vector(g, r));
      extra_twists.push_back(g.degree() + M.target().twists[r]);
    }
  auto raw = detail::raw_syzygies<K>(ring, M, extra, extra_twists, max_degree, limits, nullptr);
  std::vector<ModuleVector<K>> reduced;
  for (const auto& v : raw) {
    std::map<int, std::vector<Term<K>>> byc;
    for (const auto& t : v) byc[t.comp].push_back({t.mono, t.coeff});
    ModuleVector<K> w;
    for (auto& [c, ts] : byc) {
      auto nf = normal_form(ring, ring.from_terms(ts), I);
      for (const auto& t : nf.terms()) w.push_back({t.mono, c, t.coeff});
    }
    if (!w.empty()) reduced.push_back(std::move(w));
  }
  std::vector<ModuleVector<K>> background;
  for (int c = 0; c < M.cols(); ++c)
    for (const auto& g : I.elements)
      if (max_degree < 0 || g.degree() + M.source().twists[c] <= max_degree) background.push_back(to_module_vector(g, c));
  auto pick = detail::minimal_subset<K>(ring, M.source().twists, background, reduced, limits);
  return detail::columns_to_matrix(ring, M.source(), reduced, pick);
}

/// Minimal generators of I_1 + ... (as an ideal) from an arbitrary generating list.
template <class K>
std::vector<Polynomial<K>> minimalize_ideal(const PolyRing<K>& ring, const std::vector<Polynomial<K>>& gens) {
  std::vector<Polynomial<K>> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  return buchberger(ring, nonzero).minimal_generators;
}

/// Intersection of two ideals via the kernel of [[1, a..., 0...], [1, 0..., b...]].
template <class K>
std::vector<Polynomial<K>> ideal_intersection(const PolyRing<K>& ring, const std::vector<Polynomial<K>>& A,
                                              const std::vector<Polynomial<K>>& B) {
  GradedFreeModule src{{0}}, tgt{{0, 0}};
  for (const auto& a : A) src.twists.push_back(a.degree());
  for (const auto& b : B) src.twists.push_back(b.degree());
  GradedMatrix<K> M(src, tgt);
  M.set(0, 0, ring.one());
  M.set(1, 0, ring.one());
  int c = 1;
  for (const auto& a : A) M.set(0, c++, a);
  for (const auto& b : B) M.set(1, c++, b);
  auto syz = syzygies(ring, M);
  std::vector<Polynomial<K>> out;
  for (int j = 0; j < syz.cols(); ++j)
    if (!syz.at(0, j).is_zero()) out.push_back(syz.at(0, j));
  return minimalize_ideal(ring, out);
}

/// (L : (g)) via the syzygies of [g, l_1, ..., l_k].
template <class K>
std::vector<Polynomial<K>> colon_element(const PolyRing<K>& ring, const std::vector<Polynomial<K>>& L,
                                         const Polynomial<K>& g) {
  GradedFreeModule src{{g.degree()}}, tgt{{0}};
  for (const auto& l : L) src.twists.push_back(l.degree());
  GradedMatrix<K> M(src, tgt);
  M.set(0, 0, g);
  for (std::size_t i = 0; i < L.size(); ++i) M.set(0, static_cast<int>(i) + 1, L[i]);
  auto syz = syzygies(ring, M);
  std::vector<Polynomial<K>> out;
  for (int j = 0; j < syz.cols(); ++j)
    if (!syz.at(0, j).is_zero()) out.push_back(syz.at(0, j));
  return minimalize_ideal(ring, out);
}

/// (L : I) for L contained in I.
template <class K>
std::vector<Polynomial<K>> ideal_quotient(const PolyRing<K>& ring, const std::vector<Polynomial<K>>& L,
                                          const std::vector<Polynomial<K>>& I) {
  auto GI = buchberger(ring, I);
  for (const auto& l : L)
    if (!ideal_contains(ring, GI, l))
      throw std::invalid_argument("ideal_quotient: '" + ring.to_string(l) + "' is not in the second ideal");
  std::vector<Polynomial<K>> Lz;
  for (const auto& l : L)
    if (!l.is_zero()) Lz.push_back(l);
  std::vector<Polynomial<K>> acc;
  bool first = true;
  for (const auto& g : I) {
    if (g.is_zero()) continue;
    auto q = colon_element(ring, Lz, g);
    acc = first ? q : ideal_intersection(ring, acc, q);
    first = false;
  }
  if (first) return {ring.one()};
  return acc;
}

}  // namespace nagata

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nagata/invariants/hilbert.hpp"
#include "nagata/resolutions/resolution.hpp"

namespace nagata {

struct InvariantReport {
  int nvars = 0;
  int codim = 0;
  int reg = 0;
  int pd = 0;
  int dim = 0;
  int a_invariant = 0;
  int type = -1;  // rank of the last free module when Cohen-Macaulay, else -1
  int num_generators = 0;
  std::vector<int> generator_degrees;
  bool cohen_macaulay = false;
  bool artinian = false;
  bool quadratic = false;
  bool nondegenerate = false;
  bool level = false;
  std::optional<bool> superlevel;  // needs the canonical module presentation
  bool gorenstein = false;
  bool complete_intersection = false;
  bool almost_complete_intersection = false;
  HilbertData hilbert;
  BettiTable betti;
};

/// Cohen-Macaulay iff pd = codim; type is the rank of the last free module.
inline std::pair<bool, int> cm_and_type(const BettiTable& b, int codim) {
  bool cm = b.proj_dim() == codim;
  return {cm, cm ? static_cast<int>(b.total(b.proj_dim())) : -1};
}

/// Invariants that follow from the Groebner basis and the Betti table.
template <class K>
InvariantReport basic_invariants(const RingPresentation<K>& R, const GroebnerBasis<K>& G, const BettiTable& betti) {
  InvariantReport rep;
  rep.nvars = R.nvars();
  rep.hilbert = hilbert_series(G.leads(), R.nvars());
  rep.dim = rep.hilbert.dim;
  rep.codim = rep.nvars - rep.dim;
  rep.a_invariant = rep.hilbert.a_invariant;
  rep.betti = betti;
  rep.betti.codim = rep.codim;
  rep.reg = betti.regularity();
  rep.pd = betti.proj_dim();
  auto [cm, type] = cm_and_type(betti, rep.codim);
  rep.cohen_macaulay = cm;
  rep.type = type;
  rep.artinian = rep.dim == 0;
  rep.num_generators = static_cast<int>(G.minimal_generators.size());
  for (const auto& g : G.minimal_generators) rep.generator_degrees.push_back(g.degree());
  rep.nondegenerate = is_nondegenerate(G);
  rep.quadratic = rep.nondegenerate && !G.minimal_generators.empty();
  for (int d : rep.generator_degrees) rep.quadratic = rep.quadratic && d == 2;
  if (cm) {
    std::set<int> twists;
    for (const auto& [k, v] : betti.entries())
      if (k.first == rep.pd) twists.insert(k.second);
    rep.level = twists.size() == 1;
  }
  rep.gorenstein = cm && type == 1;
  rep.complete_intersection = rep.num_generators == rep.codim;
  rep.almost_complete_intersection = rep.num_generators == rep.codim + 1;
  if (rep.gorenstein) rep.superlevel = true;
  return rep;
}

enum class RegPdClass { Strict, CiEquality, Violation };

inline const char* to_string(RegPdClass c) {
  switch (c) {
    case RegPdClass::Strict: return "strict";
    case RegPdClass::CiEquality: return "ci-equality";
    default: return "violation";
  }
}

/// For quadratic CM rings reg <= pd, with equality exactly for complete intersections.
inline RegPdClass check_reg_le_pd(const InvariantReport& r) {
  if (r.reg > r.pd) return RegPdClass::Violation;
  if (r.reg == r.pd) return r.complete_intersection ? RegPdClass::CiEquality : RegPdClass::Violation;
  return r.complete_intersection ? RegPdClass::Violation : RegPdClass::Strict;
}

/// Standard monomials of degree d with respect to the given leads.
inline std::vector<Monomial> standard_monomials(int n, const std::vector<Monomial>& leads, int d) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(n, d)) {
    bool in = false;
    for (const auto& l : leads)
      if (l.divides(m)) {
        in = true;
        break;
      }
    if (!in) out.push_back(m);
  }
  return out;
}

/// dim_k of the socle (0 : R_+) in each degree of an Artinian R.
template <class K>
std::vector<int> socle(const RingPresentation<K>& R, const GroebnerBasis<K>& G) {
  int n = R.nvars();
  auto leads = G.leads();
  if (monomial_krull_dim(leads, n) != 0) throw std::invalid_argument("socle needs an Artinian ring");
  const K& F = R.ring.field();
  std::vector<int> out;
  for (int d = 0;; ++d) {
    auto basis = standard_monomials(n, leads, d);
    if (basis.empty()) break;
    auto next = standard_monomials(n, leads, d + 1);
    std::map<Monomial, int> idx;
    for (int i = 0; i < static_cast<int>(next.size()); ++i) idx[next[i]] = i;
    int rows = n * static_cast<int>(next.size());
    DenseMatrix<K> A(rows, std::vector<typename K::Element>(basis.size(), F.zero()));
    for (int c = 0; c < static_cast<int>(basis.size()); ++c)
      for (int v = 0; v < n; ++v) {
        auto nf = normal_form(R.ring, R.ring.term(basis[c] * Monomial::variable(n, v), F.one()), G);
        for (const auto& t : nf.terms()) A[v * next.size() + idx.at(t.mono)][c] = t.coeff;
      }
    int rank = rows ? rank_of(F, A, static_cast<int>(basis.size())) : 0;
    out.push_back(static_cast<int>(basis.size()) - rank);
  }
  return out;
}

/// omega_R = coker(phi) is linearly presented as an R-module: the minimal
/// relations modulo I*F0 all sit one degree above the generators.
template <class K>
bool is_superlevel(const PolyRing<K>& ring, const GroebnerBasis<K>& G, const GradedMatrix<K>& phi,
                   const Limits& limits = {}) {
  const auto& tw = phi.target().twists;
  if (tw.empty()) return true;
  for (int t : tw)
    if (t != tw.front()) return false;
  std::vector<ModuleVector<K>> background, candidates;
  for (int r = 0; r < phi.rows(); ++r)
    for (const auto& g : G.minimal_generators) background.push_back(to_module_vector(g, r));
  for (int c = 0; c < phi.cols(); ++c) candidates.push_back(detail::column_vector(phi, c));
  for (int c : detail::minimal_subset(ring, tw, background, candidates, limits))
    if (phi.source().twists[c] != tw.front() + 1) return false;
  return true;
}

/// Maps a polynomial free of variable `drop` into the ring without it.
template <class K>
Polynomial<K> drop_variable(const PolyRing<K>& target, const Polynomial<K>& p, int drop) {
  std::vector<Term<K>> ts;
  for (const auto& t : p.terms()) {
    if (t.mono[drop] != 0) throw std::invalid_argument("polynomial still involves the dropped variable");
    std::vector<int> e;
    for (int i = 0; i < t.mono.nvars(); ++i)
      if (i != drop) e.push_back(t.mono[i]);
    ts.push_back({Monomial(target.nvars(), e), t.coeff});
  }
  return target.from_terms(std::move(ts));
}

template <class K>
struct ArtinianReduction {
  RingPresentation<K> ring;
  std::vector<std::uint64_t> seeds_tried;
  std::uint64_t seed_used = 0;
};

/// Coefficient in {1, ..., 10000} from the generator.
inline std::int64_t reduction_coefficient(std::mt19937_64& rng) { return 1 + static_cast<std::int64_t>(rng() % 10000); }

/// Kills dim-many random linear forms by solving each for the last variable.
/// The result must be Artinian with the original h-vector, otherwise the next seed is tried.
template <class K>
ArtinianReduction<K> artinian_reduction(const RingPresentation<K>& R, std::uint64_t seed, int max_tries = 8) {
  auto G = buchberger(R);
  auto hd = hilbert_series(G.leads(), R.nvars());
  if (hd.dim == 0) return {R, {}, seed};
  const K& F = R.ring.field();
  ArtinianReduction<K> out{R, {}, 0};
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    out.seeds_tried.push_back(s);
    std::mt19937_64 rng(s);
    PolyRing<K> ring = R.ring;
    std::vector<Polynomial<K>> gens = R.generators;
    bool ok = true;
    for (int k = 0; k < hd.dim && ok; ++k) {
      int last = ring.nvars() - 1;
      std::vector<std::int64_t> c(ring.nvars());
      for (auto& x : c) x = reduction_coefficient(rng);
      auto clast = F.from_int(c[last]);
      if (F.is_zero(clast)) {
        ok = false;
        break;
      }
      // x_last = -(sum_{i<last} c_i x_i) / c_last
      Polynomial<K> value;
      for (int i = 0; i < last; ++i)
        value = ring.add(value, ring.scale(ring.var(i), F.neg(F.div(F.from_int(c[i]), clast))));
      std::vector<std::string> names(ring.names().begin(), ring.names().end() - 1);
      PolyRing<K> smaller(F, names);
      std::vector<Polynomial<K>> next;
      for (const auto& g : gens) {
        auto sub = ring.substitute(g, last, value);
        if (!sub.is_zero()) next.push_back(drop_variable(smaller, sub, last));
      }
      ring = smaller;
      gens = std::move(next);
    }
    if (!ok) continue;
    RingPresentation<K> red(ring, gens);
    auto Gr = buchberger(red);
    auto hr = hilbert_series(Gr.leads(), red.nvars());
    if (hr.dim == 0 && hr.h == hd.h) {
      out.ring = std::move(red);
      out.seed_used = s;
      return out;
    }
  }
  throw std::runtime_error("artinian_reduction: no regular sequence found after " + std::to_string(max_tries) +
                           " seeds starting at " + std::to_string(seed));
}

}  // namespace nagata

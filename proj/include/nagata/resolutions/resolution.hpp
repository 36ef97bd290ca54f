#pragma once

#include <set>
#include <vector>

#include "nagata/resolutions/frame.hpp"

namespace nagata {

/// F_0 <- F_1 <- F_2 ..., differentials[i] = d_{i+1}: F_{i+1} -> F_i.
template <class K>
struct FreeResolution {
  std::vector<GradedFreeModule> modules;
  std::vector<GradedMatrix<K>> differentials;
  bool minimal = false;
  bool over_quotient = false;
  int truncated_at = -1;

  int length() const { return static_cast<int>(differentials.size()); }
};

/// Removes unit entries from a complex one differential at a time. Feed
/// d_1, d_2, ... in order; each d_i becomes final once d_{i+1} was fed.
template <class K>
class ComplexPruner {
 public:
  using Poly = Polynomial<K>;

  explicit ComplexPruner(const PolyRing<K>& ring) : ring_(ring) {}

  void feed(const GradedMatrix<K>& d) {
    Work w = load(d);
    // rows that died as pivot columns of the previous differential
    for (int r : dead_cols_prev_) erase_row(w, r);
    std::vector<int> dead_cols;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int c = 0; c < w.ncols; ++c) {
        if (!w.col_alive[c]) continue;
        int pr = -1;
        for (const auto& [r, p] : w.cols[c])
          if (p.degree() == 0) {
            pr = r;
            break;
          }
        if (pr < 0) continue;
        pivot(w, pr, c);
        dead_cols.push_back(c);
        if (have_prev_) kill_prev_column(pr);
        progress = true;
      }
    }
    if (have_prev_) out_.push_back(finish(prev_));
    prev_ = std::move(w);
    have_prev_ = true;
    dead_cols_prev_ = std::move(dead_cols);
  }

  /// Minimal differentials, in order, after the last feed.
  std::vector<GradedMatrix<K>> finish_all() {
    if (have_prev_) out_.push_back(finish(prev_));
    have_prev_ = false;
    // drop trailing zero maps from fully pruned tails
    while (!out_.empty() && out_.back().cols() == 0) out_.pop_back();
    return std::move(out_);
  }

 private:
  struct Work {
    int nrows = 0, ncols = 0;
    GradedFreeModule src, tgt;
    std::vector<std::map<int, Poly>> cols;
    std::vector<std::set<int>> row_cols;
    std::vector<char> row_alive, col_alive;
  };

  Work load(const GradedMatrix<K>& d) {
    Work w;
    w.nrows = d.rows();
    w.ncols = d.cols();
    w.src = d.source();
    w.tgt = d.target();
    w.cols.resize(w.ncols);
    w.row_cols.resize(w.nrows);
    w.row_alive.assign(w.nrows, 1);
    w.col_alive.assign(w.ncols, 1);
    for (int c = 0; c < w.ncols; ++c)
      for (const auto& [r, p] : d.column(c)) {
        w.cols[c][r] = p;
        w.row_cols[r].insert(c);
      }
    return w;
  }

  void erase_row(Work& w, int r) {
    for (int c : w.row_cols[r]) w.cols[c].erase(r);
    w.row_cols[r].clear();
    w.row_alive[r] = 0;
  }

  void erase_col(Work& w, int c) {
    for (const auto& [r, p] : w.cols[c]) w.row_cols[r].erase(c);
    w.cols[c].clear();
    w.col_alive[c] = 0;
  }

  void pivot(Work& w, int r, int c) {
    const K& F = ring_.field();
    auto u = w.cols[c].at(r).terms().front().coeff;
    auto minus_inv = F.neg(F.inv(u));
    std::vector<int> others(w.row_cols[r].begin(), w.row_cols[r].end());
    const auto pcol = w.cols[c];
    for (int j : others) {
      if (j == c) continue;
      Poly factor = ring_.scale(w.cols[j].at(r), minus_inv);
      for (const auto& [rr, p] : pcol) {
        Poly add = ring_.mul(factor, p);
        auto it = w.cols[j].find(rr);
        Poly sum = it == w.cols[j].end() ? add : ring_.add(it->second, add);
        if (sum.is_zero()) {
          if (it != w.cols[j].end()) w.cols[j].erase(it);
          w.row_cols[rr].erase(j);
        } else {
          w.cols[j][rr] = std::move(sum);
          w.row_cols[rr].insert(j);
        }
      }
    }
    erase_col(w, c);
    erase_row(w, r);
  }

  void kill_prev_column(int c) { erase_col(prev_, c); }

  GradedMatrix<K> finish(const Work& w) {
    std::vector<int> rmap(w.nrows, -1), cmap(w.ncols, -1);
    GradedFreeModule src, tgt;
    for (int r = 0; r < w.nrows; ++r)
      if (w.row_alive[r]) {
        rmap[r] = tgt.rank();
        tgt.twists.push_back(w.tgt.twists[r]);
      }
    for (int c = 0; c < w.ncols; ++c)
      if (w.col_alive[c]) {
        cmap[c] = src.rank();
        src.twists.push_back(w.src.twists[c]);
      }
    GradedMatrix<K> m(src, tgt);
    for (int c = 0; c < w.ncols; ++c) {
      if (cmap[c] < 0) continue;
      for (const auto& [r, p] : w.cols[c]) {
        if (rmap[r] < 0) throw std::logic_error("pruner: entry in a deleted row");
        m.set(rmap[r], cmap[c], p);
      }
    }
    return m;
  }

  const PolyRing<K>& ring_;
  Work prev_;
  bool have_prev_ = false;
  std::vector<int> dead_cols_prev_;
  std::vector<GradedMatrix<K>> out_;
};

namespace detail {

template <class K>
GradedMatrix<K> frame_matrix(const PolyRing<K>& ring, const FrameLevel<K>& L) {
  GradedMatrix<K> m(GradedFreeModule{L.degrees}, GradedFreeModule{L.prev_degrees});
  for (int c = 0; c < static_cast<int>(L.columns.size()); ++c) {
    std::map<int, std::vector<Term<K>>> rows;
    for (const auto& t : L.columns[c]) rows[t.row].push_back({t.mono, t.coeff});
    for (auto& [r, ts] : rows) {
      auto p = ring.from_terms(std::move(ts));
      if (!p.is_zero()) m.set(r, c, std::move(p));
    }
  }
  return m;
}

template <class K>
FreeResolution<K> assemble(std::vector<GradedMatrix<K>> ds, bool minimal) {
  FreeResolution<K> res;
  res.minimal = minimal;
  res.modules.push_back(GradedFreeModule{{0}});
  for (auto& d : ds) {
    res.modules.push_back(d.source());
    res.differentials.push_back(std::move(d));
  }
  return res;
}

}  // namespace detail

/// The full Schreyer resolution of S/I, not minimal.
template <class K>
FreeResolution<K> schreyer_resolution(const PolyRing<K>& ring, const GroebnerBasis<K>& G, const Limits& limits = {}) {
  std::vector<GradedMatrix<K>> ds;
  SchreyerFrame<K> frame(ring, G, limits);
  frame.run([&](const FrameLevel<K>& L) { ds.push_back(detail::frame_matrix(ring, L)); });
  return detail::assemble(std::move(ds), false);
}

/// Minimal graded free resolution of S/I: Schreyer frame pruned level by level.
template <class K>
FreeResolution<K> resolve_over_poly(const RingPresentation<K>& pres, const Limits& limits = {}) {
  auto G = buchberger(pres, -1, limits);
  ComplexPruner<K> pruner(pres.ring);
  SchreyerFrame<K> frame(pres.ring, G, limits);
  frame.run([&](const FrameLevel<K>& L) { pruner.feed(detail::frame_matrix(pres.ring, L)); });
  return detail::assemble(pruner.finish_all(), true);
}

/// Prunes unit entries from any complex.
template <class K>
FreeResolution<K> minimalize(const PolyRing<K>& ring, const FreeResolution<K>& res) {
  ComplexPruner<K> pruner(ring);
  for (const auto& d : res.differentials) pruner.feed(d);
  FreeResolution<K> out;
  out.minimal = true;
  out.over_quotient = res.over_quotient;
  out.truncated_at = res.truncated_at;
  auto ds = pruner.finish_all();
  // F_0 may itself lose rank when d_1 had unit entries
  if (!ds.empty())
    out.modules.push_back(ds.front().target());
  else if (!res.differentials.empty())
    out.modules.push_back(GradedFreeModule{});
  else if (!res.modules.empty())
    out.modules.push_back(res.modules.front());
  for (auto& d : ds) {
    out.modules.push_back(d.source());
    out.differentials.push_back(std::move(d));
  }
  return out;
}

/// Betti table of a minimal resolution.
template <class K>
BettiTable betti_table(const FreeResolution<K>& res) {
  if (!res.minimal) throw std::invalid_argument("betti_table needs a minimal resolution");
  BettiTable b;
  for (int i = 0; i < static_cast<int>(res.modules.size()); ++i)
    for (int t : res.modules[i].twists) b.add(i, t, 1);
  return b;
}

/// True iff every pair of consecutive differentials composes to zero.
template <class K>
bool is_complex(const PolyRing<K>& ring, const FreeResolution<K>& res) {
  for (int i = 0; i + 1 < res.length(); ++i)
    if (!compose(ring, res.differentials[i], res.differentials[i + 1]).is_zero()) return false;
  return true;
}

/// beta^R_{i,j}(k) for i <= N and j <= jmax, by iterated syzygies over R.
template <class K>
BettiTable resolve_k_over_quotient(const RingPresentation<K>& R, int N, int jmax, const Limits& limits = {},
                                   FreeResolution<K>* resolution = nullptr) {
  if (N < 1 || jmax < N) throw std::invalid_argument("resolve_k_over_quotient needs N >= 1 and jmax >= N");
  const auto& ring = R.ring;
  auto G = buchberger(R, jmax, limits);
  BettiTable b;
  b.bound(N, jmax);
  b.set(0, 0, 1);
  // minimal generators of the maximal ideal of R
  std::vector<ModuleVector<K>> vars, background;
  for (int i = 0; i < ring.nvars(); ++i) vars.push_back(to_module_vector(ring.var(i)));
  for (const auto& g : G.elements)
    if (g.degree() <= 1) background.push_back(to_module_vector(g));
  auto pick = detail::minimal_subset<K>(ring, {0}, background, vars, limits);
  GradedMatrix<K> M = detail::columns_to_matrix(ring, GradedFreeModule{{0}}, vars, pick);
  FreeResolution<K> res;
  res.over_quotient = true;
  res.minimal = true;
  res.truncated_at = jmax;
  res.modules.push_back(GradedFreeModule{{0}});
  for (int i = 1; i <= N; ++i) {
    for (int t : M.source().twists) b.add(i, t, 1);
    res.modules.push_back(M.source());
    res.differentials.push_back(M);
    if (i == N || M.cols() == 0) break;
    M = syzygies_over_quotient(ring, M, G, jmax, limits);
  }
  if (resolution) *resolution = std::move(res);
  return b;
}

}  // namespace nagata

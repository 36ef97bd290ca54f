#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "nagata/core/linalg.hpp"
#include "nagata/groebner/groebner.hpp"
#include "nagata/resolutions/betti.hpp"

namespace nagata {

/// One term m * coeff * e_row of a frame differential column.
template <class K>
struct FrameTerm {
  Monomial mono;
  int row;
  typename K::Element coeff;
};

/// Level of a Schreyer frame: d_level maps these elements into the previous level.
template <class K>
struct FrameLevel {
  int level = 0;
  std::vector<int> degrees;                         // degree of each element
  std::vector<std::vector<FrameTerm<K>>> columns;   // image of each element, lead term first
  std::vector<int> prev_degrees;
};

/// Schreyer's construction of a (generally non-minimal) free resolution of
/// S/I from a Groebner basis, one level at a time. Only the current and the
/// previous level are held in memory.
template <class K>
class SchreyerFrame {
 public:
  using Element = typename K::Element;

  SchreyerFrame(const PolyRing<K>& ring, const GroebnerBasis<K>& G, Limits limits = {})
      : ring_(ring), field_(ring.field()), gb_(G), limits_(limits) {
    if (!G.complete()) throw std::invalid_argument("Schreyer frame needs a complete Groebner basis");
  }

  /// Calls on_level for d_1, d_2, ... until the frame ends. Returns the length.
  int run(const std::function<void(const FrameLevel<K>&)>& on_level) {
    int n = ring_.nvars();
    // level 0: the free module S
    prev_.clear();
    prev_.push_back({Monomial(n), 0, Monomial(n), 0, {}});

    // level 1: the Groebner basis sorted lex-ascending on leads
    std::vector<Polynomial<K>> gens;
    for (const auto& g : gb_.elements)
      if (!g.is_zero()) gens.push_back(g);
    std::stable_sort(gens.begin(), gens.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
      return a.lead_monomial().cmp_lex(b.lead_monomial()) < 0;
    });
    cur_.clear();
    for (const auto& g : gens) {
      Elem e;
      e.mu = g.lead_monomial();
      e.comp = 0;
      e.total = e.mu;
      e.degree = e.mu.degree();
      Element inv = field_.inv(g.lead().coeff);
      for (const auto& t : g.terms()) e.vec.push_back({t.mono, 0, field_.mul(t.coeff, inv)});
      cur_.push_back(std::move(e));
    }
    if (cur_.empty()) return 0;
    emit(1, on_level);

    int level = 1;
    for (;;) {
      std::vector<Elem> next = build_next_level();
      if (next.empty()) break;
      prev_ = std::move(cur_);
      cur_ = std::move(next);
      ++level;
      emit(level, on_level);
    }
    return level;
  }

  std::size_t total_elements() const { return total_; }

 private:
  struct Elem {
    Monomial mu;      // lead monomial
    int comp;         // lead component in the previous level
    Monomial total;   // mu * total(comp)
    int degree;
    std::vector<FrameTerm<K>> vec;
  };

  void emit(int level, const std::function<void(const FrameLevel<K>&)>& on_level) {
    FrameLevel<K> L;
    L.level = level;
    for (const auto& e : cur_) {
      L.degrees.push_back(e.degree);
      L.columns.push_back(e.vec);
    }
    for (const auto& e : prev_) L.prev_degrees.push_back(e.degree);
    total_ += cur_.size();
    on_level(L);
  }

  std::vector<Elem> build_next_level() {
    std::vector<std::vector<int>> by_comp(prev_.size());
    for (int k = 0; k < static_cast<int>(cur_.size()); ++k) by_comp[cur_[k].comp].push_back(k);

    std::vector<Elem> next;
    for (int k = 0; k < static_cast<int>(cur_.size()); ++k) {
      const auto& ek = cur_[k];
      std::vector<Monomial> colon;
      for (int j : by_comp[ek.comp]) {
        if (j >= k) break;
        colon.push_back(cur_[j].mu.lcm(ek.mu) / ek.mu);
      }
      // minimal generators of the monomial ideal
      std::sort(colon.begin(), colon.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.cmp_lex(b) < 0;
      });
      std::vector<Monomial> mins;
      for (const auto& m : colon) {
        bool redundant = false;
        for (const auto& p : mins)
          if (p.divides(m)) {
            redundant = true;
            break;
          }
        if (!redundant) mins.push_back(m);
      }
      std::sort(mins.begin(), mins.end(), [](const Monomial& a, const Monomial& b) { return a.cmp_lex(b) < 0; });
      for (const auto& q : mins) {
        Elem e;
        e.mu = q;
        e.comp = k;
        e.total = q * ek.total;
        e.degree = e.total.degree();
        next.push_back(std::move(e));
      }
    }
    for (auto& e : next) {
      watch_.check(limits_, "resolution");
      e.vec = lift(e.mu, e.comp, by_comp);
    }
    return next;
  }

  struct Key {
    Monomial mono;
    int comp;
    bool operator==(const Key& o) const { return comp == o.comp && mono == o.mono; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return k.mono.hash() ^ (static_cast<std::size_t>(k.comp) * 0x9e3779b97f4a7c15ull);
    }
  };
  struct HeapItem {
    Monomial total;
    int comp;
    Monomial mono;
  };
  struct HeapLess {
    bool operator()(const HeapItem& a, const HeapItem& b) const {
      int c = a.total.cmp(b.total);
      if (c) return c < 0;
      return a.comp < b.comp;
    }
  };

  /// Column of the new element with lead q * e_k: q*e_k minus the quotients
  /// of dividing q * vec(e_k) by the current level.
  std::vector<FrameTerm<K>> lift(const Monomial& q, int k, const std::vector<std::vector<int>>& by_comp) {
    std::vector<FrameTerm<K>> out;
    out.push_back({q, k, field_.one()});
    std::unordered_map<Key, Element, KeyHash> coeffs;
    std::priority_queue<HeapItem, std::vector<HeapItem>, HeapLess> heap;
    auto push = [&](const Monomial& m, int c, const Element& v) {
      if (field_.is_zero(v)) return;
      auto [it, fresh] = coeffs.try_emplace(Key{m, c}, v);
      if (fresh)
        heap.push({m * prev_[c].total, c, m});
      else
        it->second = field_.add(it->second, v);
      if (limits_.max_entries && coeffs.size() > limits_.max_entries)
        throw ResourceExceeded("resolution: reduction exceeded " + std::to_string(limits_.max_entries) + " entries");
    };
    for (const auto& t : cur_[k].vec) push(t.mono * q, t.row, t.coeff);
    while (!heap.empty()) {
      HeapItem h = heap.top();
      heap.pop();
      auto it = coeffs.find(Key{h.mono, h.comp});
      Element v = it->second;
      coeffs.erase(it);
      if (field_.is_zero(v)) continue;
      int b = -1;
      for (int cand : by_comp[h.comp])
        if (cur_[cand].mu.divides(h.mono)) {
          b = cand;
          break;
        }
      if (b < 0) throw std::logic_error("Schreyer frame: syzygy did not reduce to zero");
      Monomial qq = h.mono / cur_[b].mu;
      Element neg = field_.neg(v);
      if (b == k && qq == q) throw std::logic_error("Schreyer frame: lead term divided by itself");
      out.push_back({qq, b, neg});
      const auto& vb = cur_[b].vec;
      for (std::size_t t = 1; t < vb.size(); ++t) push(vb[t].mono * qq, vb[t].row, field_.mul(neg, vb[t].coeff));
    }
    return out;
  }

  const PolyRing<K>& ring_;
  K field_;
  const GroebnerBasis<K>& gb_;
  Limits limits_;
  Stopwatch watch_;
  std::vector<Elem> prev_, cur_;
  std::size_t total_ = 0;
};

/// Betti numbers of S/I from the frame: beta_{i,j} = f_{i,j} - rank C_i - rank C_{i+1},
/// where C_i is the scalar part of the degree-j block of d_i.
template <class K>
BettiTable frame_betti(const PolyRing<K>& ring, const GroebnerBasis<K>& G, const Limits& limits = {}) {
  std::map<std::pair<int, int>, std::int64_t> counts;  // f_{i,j}
  std::map<std::pair<int, int>, std::int64_t> ranks;   // rank of C_i in degree j
  counts[{0, 0}] = 1;
  SchreyerFrame<K> frame(ring, G, limits);
  frame.run([&](const FrameLevel<K>& L) {
    std::map<int, std::vector<int>> cols_by_degree;
    for (int c = 0; c < static_cast<int>(L.degrees.size()); ++c) {
      counts[{L.level, L.degrees[c]}]++;
      cols_by_degree[L.degrees[c]].push_back(c);
    }
    for (const auto& [d, cols] : cols_by_degree) {
      RowEchelon<K> ech(ring.field(), static_cast<int>(L.prev_degrees.size()));
      for (int c : cols) {
        SparseRow<K> row;
        for (const auto& t : L.columns[c])
          if (t.mono.is_one()) row.emplace_back(t.row, t.coeff);
        if (row.empty()) continue;
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        ech.insert(row);
      }
      if (ech.rank()) ranks[{L.level, d}] = ech.rank();
    }
  });
  BettiTable b;
  for (const auto& [key, f] : counts) {
    auto [i, j] = key;
    std::int64_t v = f;
    if (auto it = ranks.find({i, j}); it != ranks.end()) v -= it->second;
    if (auto it = ranks.find({i + 1, j}); it != ranks.end()) v -= it->second;
    if (v < 0) throw std::logic_error("negative Betti number from frame ranks");
    b.set(i, j, v);
  }
  return b;
}

}  // namespace nagata

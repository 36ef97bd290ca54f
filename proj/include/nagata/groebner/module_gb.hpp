#pragma once

#include <algorithm>
#include <functional>
#include <tuple>
#include <map>
#include <queue>
#include <unordered_map>
#include <vector>

#include "nagata/core/polynomial.hpp"
#include "nagata/groebner/limits.hpp"

namespace nagata {

template <class K>
struct ModuleTerm {
  Monomial mono;
  int comp;
  typename K::Element coeff;
};

/// Element of a graded free module, terms sorted descending in the module order.
template <class K>
using ModuleVector = std::vector<ModuleTerm<K>>;

/// Term order on S^r: total degree, then block (higher block is larger),
/// then degrevlex on the monomial, then lower component index first.
struct ModuleOrder {
  std::vector<int> twists;
  std::vector<int> blocks;

  int rank() const { return static_cast<int>(twists.size()); }
  int degree(const Monomial& m, int comp) const { return m.degree() + twists[comp]; }

  int cmp(const Monomial& a, int ca, const Monomial& b, int cb) const {
    int da = a.degree() + twists[ca], db = b.degree() + twists[cb];
    if (da != db) return da < db ? -1 : 1;
    if (blocks[ca] != blocks[cb]) return blocks[ca] < blocks[cb] ? -1 : 1;
    int c = a.cmp(b);
    if (c) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

  static ModuleOrder uniform(std::vector<int> twists) {
    ModuleOrder o;
    o.blocks.assign(twists.size(), 0);
    o.twists = std::move(twists);
    return o;
  }
};

/// How an input vector takes part in the computation.
enum class InputRole {
  Plain,       // part of the module, not tracked
  Background,  // generates a submodule we reduce modulo; never reported
  Candidate,   // reported as minimal when independent of everything before it
};

template <class K>
struct ModuleInput {
  ModuleVector<K> vec;
  InputRole role = InputRole::Plain;
};

template <class K>
struct ModuleGBResult {
  std::vector<ModuleVector<K>> basis;
  /// Indices into the input list of the candidates that survived, in processing order.
  std::vector<int> minimal;
  /// Degree past which nothing was computed, or -1 if complete.
  int truncated_at = -1;
};

/// Homogeneous Buchberger for submodules of a graded free module, processed
/// degree by degree with the Gebauer-Moeller criteria. Inputs of a degree
/// are injected after that degree's S-pairs, in the order given.
template <class K>
class ModuleGB {
 public:
  using Element = typename K::Element;
  using Vec = ModuleVector<K>;

  ModuleGB(const PolyRing<K>& ring, ModuleOrder order, Limits limits = {})
      : ring_(ring), field_(ring.field()), order_(std::move(order)), limits_(limits), by_comp_(order_.rank()) {}

  ModuleGBResult<K> run(const std::vector<ModuleInput<K>>& inputs, int max_degree = -1) {
    ModuleGBResult<K> result;
    std::map<int, std::vector<int>> inputs_by_degree;
    for (int i = 0; i < static_cast<int>(inputs.size()); ++i) {
      const auto& v = inputs[i].vec;
      if (v.empty()) continue;
      check_homogeneous(v);
      int d = order_.degree(v.front().mono, v.front().comp);
      inputs_by_degree[d].push_back(i);
    }
    // keep Background before Candidate within a degree, stable otherwise
    for (auto& [d, list] : inputs_by_degree)
      std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
        return rank_of(inputs[a].role) < rank_of(inputs[b].role);
      });

    for (;;) {
      int d = next_degree(inputs_by_degree);
      if (d == kNone) break;
      if (max_degree >= 0 && d > max_degree) {
        result.truncated_at = max_degree;
        break;
      }
      memo_.clear();
      auto pit = pairs_.find(d);
      if (pit != pairs_.end()) {
        std::vector<Pair> batch = std::move(pit->second);
        pairs_.erase(pit);
        pair_count_ -= batch.size();
        std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
          int c = order_.cmp(a.lcm, a.comp, b.lcm, b.comp);
          if (c) return c < 0;
          return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
        for (const auto& p : batch) {
          watch_.check(limits_, "groebner");
          Vec r = reduce(spair(p));
          if (!r.empty()) add(std::move(r));
        }
      }
      auto iit = inputs_by_degree.find(d);
      if (iit != inputs_by_degree.end()) {
        for (int idx : iit->second) {
          Vec r = reduce(inputs[idx].vec);
          if (r.empty()) continue;
          add(std::move(r));
          if (inputs[idx].role == InputRole::Candidate) result.minimal.push_back(idx);
        }
        inputs_by_degree.erase(iit);
      }
    }
    if (result.truncated_at < 0 && max_degree >= 0 && !pairs_.empty()) result.truncated_at = max_degree;
    interreduce();
    result.basis = basis_;
    return result;
  }

  /// Full reduction against the current basis.
  Vec reduce(const Vec& v) {
    Accumulator acc(*this);
    for (const auto& t : v) acc.add(t.mono, t.comp, t.coeff);
    return acc.drain(-1);
  }

  const std::vector<Vec>& basis() const { return basis_; }
  const ModuleOrder& order() const { return order_; }

  void sort_terms(Vec& v) const {
    std::sort(v.begin(), v.end(),
              [&](const ModuleTerm<K>& a, const ModuleTerm<K>& b) { return order_.cmp(a.mono, a.comp, b.mono, b.comp) > 0; });
  }

 private:
  static constexpr int kNone = 1 << 30;

  struct Pair {
    int i, j;
    Monomial lcm;
    int comp;
  };

  struct Key {
    Monomial mono;
    int comp;
    bool operator==(const Key& o) const { return comp == o.comp && mono == o.mono; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.mono.hash() ^ (static_cast<std::size_t>(k.comp) * 0x9e3779b97f4a7c15ull); }
  };

  static int rank_of(InputRole r) { return r == InputRole::Background ? 0 : 1; }

  class Accumulator {
   public:
    explicit Accumulator(ModuleGB& gb)
        : gb_(gb), heap_([&gb](const Key& a, const Key& b) { return gb.order_.cmp(a.mono, a.comp, b.mono, b.comp) < 0; }) {}

    void add(const Monomial& m, int comp, const Element& c) {
      if (gb_.field_.is_zero(c)) return;
      Key k{m, comp};
      auto [it, fresh] = coeffs_.try_emplace(k, c);
      if (fresh) {
        heap_.push(k);
        if (gb_.limits_.max_entries && coeffs_.size() > gb_.limits_.max_entries)
          throw ResourceExceeded("groebner: reduction exceeded " + std::to_string(gb_.limits_.max_entries) + " entries");
      } else {
        it->second = gb_.field_.add(it->second, c);
      }
    }

    /// Pops everything, reducing every term that has a divisor other than `skip`.
    Vec drain(int skip) {
      Vec out;
      while (!heap_.empty()) {
        Key k = heap_.top();
        heap_.pop();
        auto it = coeffs_.find(k);
        Element v = it->second;
        coeffs_.erase(it);
        if (gb_.field_.is_zero(v)) continue;
        int g = gb_.find_divisor(k.mono, k.comp, skip);
        if (g < 0) {
          out.push_back({k.mono, k.comp, v});
          continue;
        }
        const Vec& f = gb_.basis_[g];
        Monomial q = k.mono / f.front().mono;
        Element neg = gb_.field_.neg(v);
        for (std::size_t t = 1; t < f.size(); ++t) add(f[t].mono * q, f[t].comp, gb_.field_.mul(neg, f[t].coeff));
      }
      return out;
    }

   private:
    ModuleGB& gb_;
    std::unordered_map<Key, Element, KeyHash> coeffs_;
    std::priority_queue<Key, std::vector<Key>, std::function<bool(const Key&, const Key&)>> heap_;
  };

  int next_degree(const std::map<int, std::vector<int>>& inputs) const {
    int d = kNone;
    if (!pairs_.empty()) d = pairs_.begin()->first;
    if (!inputs.empty()) d = std::min(d, inputs.begin()->first);
    return d;
  }

  void check_homogeneous(const Vec& v) const {
    int d = order_.degree(v.front().mono, v.front().comp);
    for (const auto& t : v) {
      if (t.comp < 0 || t.comp >= order_.rank()) throw std::invalid_argument("module component out of range");
      if (order_.degree(t.mono, t.comp) != d) throw std::invalid_argument("inhomogeneous input to groebner basis computation");
    }
  }

  int find_divisor(const Monomial& m, int comp, int skip) {
    const auto& cands = by_comp_[comp];
    if (skip >= 0) {
      for (int g : cands)
        if (g != skip && basis_[g].front().mono.divides(m)) return g;
      return -1;
    }
    auto [it, fresh] = memo_.try_emplace(Key{m, comp}, std::pair<int, int>{-1, 0});
    auto& [found, checked] = it->second;
    if (found >= 0) return found;
    for (; checked < static_cast<int>(cands.size()); ++checked) {
      if (basis_[cands[checked]].front().mono.divides(m)) {
        found = cands[checked];
        return found;
      }
    }
    return -1;
  }

  Vec spair(const Pair& p) {
    const Vec& f = basis_[p.i];
    const Vec& g = basis_[p.j];
    Monomial qf = p.lcm / f.front().mono, qg = p.lcm / g.front().mono;
    Accumulator acc(*this);
    for (std::size_t t = 1; t < f.size(); ++t) acc.add(f[t].mono * qf, f[t].comp, f[t].coeff);
    for (std::size_t t = 1; t < g.size(); ++t) acc.add(g[t].mono * qg, g[t].comp, field_.neg(g[t].coeff));
    return acc.drain(-1);
  }

  void add(Vec r) {
    Element inv = field_.inv(r.front().coeff);
    if (!field_.is_one(inv))
      for (auto& t : r) t.coeff = field_.mul(t.coeff, inv);
    int h = static_cast<int>(basis_.size());
    int comp = r.front().comp;
    update_pairs(h, r.front().mono, comp);
    basis_.push_back(std::move(r));
    by_comp_[comp].push_back(h);
  }

  void update_pairs(int h, const Monomial& H, int comp) {
    bool ideal = order_.rank() == 1;
    // Gebauer-Moeller: filter old pairs
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      auto& list = it->second;
      std::size_t before = list.size();
      list.erase(std::remove_if(list.begin(), list.end(),
                                [&](const Pair& p) {
                                  if (p.comp != comp || !H.divides(p.lcm)) return false;
                                  const Monomial& a = basis_[p.i].front().mono;
                                  const Monomial& b = basis_[p.j].front().mono;
                                  return !(a.lcm(H) == p.lcm) && !(b.lcm(H) == p.lcm);
                                }),
                 list.end());
      pair_count_ -= before - list.size();
      if (list.empty()) it = pairs_.erase(it);
      else ++it;
    }
    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (int i : by_comp_[comp]) {
      const Monomial& a = basis_[i].front().mono;
      cands.push_back({i, a.lcm(H), ideal && a.coprime(H)});
    }
    // chain criterion among the new pairs
    std::vector<char> alive(cands.size(), 1);
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (cands[x].coprime) continue;
      for (std::size_t y = 0; y < cands.size(); ++y) {
        if (x == y || !alive[y]) continue;
        if (cands[y].lcm.divides(cands[x].lcm) && (!(cands[y].lcm == cands[x].lcm) || y > x || cands[y].coprime)) {
          alive[x] = 0;
          break;
        }
      }
    }
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (!alive[x] || cands[x].coprime) continue;
      int d = order_.degree(cands[x].lcm, comp);
      pairs_[d].push_back({cands[x].i, h, cands[x].lcm, comp});
      ++pair_count_;
    }
    if (limits_.max_pairs && pair_count_ > limits_.max_pairs)
      throw ResourceExceeded("groebner: pair queue exceeded " + std::to_string(limits_.max_pairs));
  }

  void interreduce() {
    for (int g = 0; g < static_cast<int>(basis_.size()); ++g) {
      Accumulator acc(*this);
      const Vec& f = basis_[g];
      for (std::size_t t = 1; t < f.size(); ++t) acc.add(f[t].mono, f[t].comp, f[t].coeff);
      Vec tail = acc.drain(g);
      Vec out;
      out.reserve(tail.size() + 1);
      out.push_back(f.front());
      for (auto& t : tail) out.push_back(std::move(t));
      basis_[g] = std::move(out);
    }
  }

  const PolyRing<K>& ring_;
  K field_;
  ModuleOrder order_;
  Limits limits_;
  Stopwatch watch_;
  std::vector<Vec> basis_;
  std::vector<std::vector<int>> by_comp_;
  std::map<int, std::vector<Pair>> pairs_;
  std::size_t pair_count_ = 0;
  std::unordered_map<Key, std::pair<int, int>, KeyHash> memo_;
};

}  // namespace nagata

#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nagata/core/field.hpp"

namespace nagata {

template <class K>
using SparseRow = std::vector<std::pair<int, typename K::Element>>;

/// Incremental row echelon form over K. Rows are sparse, pivots are the
/// leftmost nonzero column and pivot entries are normalized to one.
template <class K>
class RowEchelon {
 public:
  using Element = typename K::Element;

  RowEchelon(K field, int ncols) : field_(std::move(field)), ncols_(ncols), scratch_(ncols, field_.zero()) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }

  /// Reduces `row` against the stored pivots. Returns true if it was independent.
  bool insert(const SparseRow<K>& row) {
    SparseRow<K> r = reduce(row);
    if (r.empty()) return false;
    Element inv = field_.inv(r.front().second);
    for (auto& e : r) e.second = field_.mul(e.second, inv);
    pivot_of_.emplace(r.front().first, static_cast<int>(rows_.size()));
    rows_.push_back(std::move(r));
    return true;
  }

  /// Remainder of `row` modulo the stored rows, in sparse form.
  SparseRow<K> reduce(const SparseRow<K>& row) {
    std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
    for (const auto& [c, v] : row) {
      if (field_.is_zero(v)) continue;
      if (field_.is_zero(scratch_[c])) heap.push(c);
      scratch_[c] = field_.add(scratch_[c], v);
    }
    SparseRow<K> out;
    int last = -1;
    while (!heap.empty()) {
      int c = heap.top();
      heap.pop();
      if (c == last) continue;
      last = c;
      Element v = scratch_[c];
      if (field_.is_zero(v)) continue;
      auto it = pivot_of_.find(c);
      if (it == pivot_of_.end()) {
        out.emplace_back(c, v);
        scratch_[c] = field_.zero();
        continue;
      }
      const auto& p = rows_[it->second];
      scratch_[c] = field_.zero();
      for (std::size_t k = 1; k < p.size(); ++k) {
        int cc = p[k].first;
        if (field_.is_zero(scratch_[cc])) heap.push(cc);
        scratch_[cc] = field_.sub(scratch_[cc], field_.mul(v, p[k].second));
      }
    }
    return out;
  }

  const std::vector<SparseRow<K>>& rows() const { return rows_; }
  bool has_pivot(int c) const { return pivot_of_.count(c) != 0; }

 private:
  K field_;
  int ncols_;
  std::vector<Element> scratch_;
  std::vector<SparseRow<K>> rows_;
  std::unordered_map<int, int> pivot_of_;
};

template <class K>
using DenseMatrix = std::vector<std::vector<typename K::Element>>;

/// Reduced row echelon form in place; returns the pivot columns.
template <class K>
std::vector<int> rref(const K& field, DenseMatrix<K>& m, int ncols) {
  std::vector<int> pivots;
  int r = 0;
  int nrows = static_cast<int>(m.size());
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int p = -1;
    for (int i = r; i < nrows; ++i)
      if (!field.is_zero(m[i][c])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    auto inv = field.inv(m[r][c]);
    for (int k = c; k < ncols; ++k) m[r][k] = field.mul(m[r][k], inv);
    for (int i = 0; i < nrows; ++i) {
      if (i == r || field.is_zero(m[i][c])) continue;
      auto f = m[i][c];
      for (int k = c; k < ncols; ++k)
        if (!field.is_zero(m[r][k])) m[i][k] = field.sub(m[i][k], field.mul(f, m[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

/// Basis of {v : m v = 0}.
template <class K>
std::vector<std::vector<typename K::Element>> nullspace(const K& field, DenseMatrix<K> m, int ncols) {
  auto pivots = rref(field, m, ncols);
  std::vector<char> is_pivot(ncols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<typename K::Element>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename K::Element> v(ncols, field.zero());
    v[f] = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(m[i][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
int rank_of(const K& field, DenseMatrix<K> m, int ncols) {
  return static_cast<int>(rref(field, m, ncols).size());
}

}  // namespace nagata

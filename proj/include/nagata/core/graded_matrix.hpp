#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nagata/core/polynomial.hpp"

namespace nagata {

/// Free module S(-d_1) + ... + S(-d_r); twists hold the generator degrees d_i.
struct GradedFreeModule {
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  bool operator==(const GradedFreeModule&) const = default;
};

/// Homogeneous map src -> tgt stored as sparse columns.
template <class K>
class GradedMatrix {
 public:
  using Poly = Polynomial<K>;
  using Column = std::map<int, Poly>;

  GradedMatrix() = default;
  GradedMatrix(GradedFreeModule src, GradedFreeModule tgt)
      : src_(std::move(src)), tgt_(std::move(tgt)), cols_(src_.rank()) {}

  const GradedFreeModule& source() const { return src_; }
  const GradedFreeModule& target() const { return tgt_; }
  int rows() const { return tgt_.rank(); }
  int cols() const { return src_.rank(); }

  const Column& column(int c) const { return cols_.at(c); }
  Column& column_mut(int c) { return cols_.at(c); }

  const Poly& at(int r, int c) const {
    static const Poly zero;
    const auto& col = cols_.at(c);
    auto it = col.find(r);
    return it == col.end() ? zero : it->second;
  }

  /// Stores p at (r, c); p must be zero or homogeneous of the matching degree.
  void set(int r, int c, Poly p) {
    if (r < 0 || r >= rows() || c < 0 || c >= cols()) throw std::out_of_range("matrix index out of range");
    if (p.is_zero()) {
      cols_[c].erase(r);
      return;
    }
    int want = src_.twists[c] - tgt_.twists[r];
    if (!p.is_homogeneous() || p.degree() != want)
      throw std::invalid_argument("entry (" + std::to_string(r) + "," + std::to_string(c) + ") has degree " +
                                  std::to_string(p.degree()) + ", expected " + std::to_string(want));
    cols_[c][r] = std::move(p);
  }

  bool is_zero() const {
    for (const auto& c : cols_)
      if (!c.empty()) return false;
    return true;
  }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
  }

  GradedMatrix transpose(int shift) const {
    // Dual map Hom(tgt, S(-shift)) -> Hom(src, S(-shift)).
    GradedFreeModule s, t;
    for (int d : tgt_.twists) s.twists.push_back(shift - d);
    for (int d : src_.twists) t.twists.push_back(shift - d);
    GradedMatrix m(s, t);
    for (int c = 0; c < cols(); ++c)
      for (const auto& [r, p] : cols_[c]) m.cols_[r][c] = p;
    return m;
  }

  static GradedMatrix identity(const GradedFreeModule& f, const PolyRing<K>& ring) {
    GradedMatrix m(f, f);
    for (int i = 0; i < f.rank(); ++i) m.cols_[i][i] = ring.one();
    return m;
  }

 private:
  GradedFreeModule src_, tgt_;
  std::vector<Column> cols_;
};

/// a * b, i.e. first b then a.
template <class K>
GradedMatrix<K> compose(const PolyRing<K>& ring, const GradedMatrix<K>& a, const GradedMatrix<K>& b) {
  if (!(a.source() == b.target())) throw std::invalid_argument("cannot compose: module mismatch");
  GradedMatrix<K> out(b.source(), a.target());
  for (int c = 0; c < b.cols(); ++c) {
    std::map<int, Polynomial<K>> acc;
    for (const auto& [k, q] : b.column(c))
      for (const auto& [r, p] : a.column(k)) acc[r] = ring.add(acc[r], ring.mul(p, q));
    for (auto& [r, p] : acc)
      if (!p.is_zero()) out.set(r, c, std::move(p));
  }
  return out;
}

}  // namespace nagata

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nagata/core/linalg.hpp"
#include "nagata/groebner/groebner.hpp"
#include "nagata/groebner/limits.hpp"
#include "nagata/invariants/hilbert.hpp"
#include "nagata/resolutions/betti.hpp"

namespace nagata {

/// A finite-dimensional graded k-vector space with a basis in each degree
/// and a bilinear action on basis elements. Used both for Artinian algebras
/// (acting on themselves) and for finite graded modules over them.
template <class K>
struct GradedAlgebra {
  K field;
  std::vector<int> dims;  // dims[d] = dim A_d, d = 0..top
  // table[d1][d2][i * dims[d2] + j] = e_i * e_j in degree d1 + d2
  std::vector<std::vector<std::vector<SparseRow<K>>>> table;

  explicit GradedAlgebra(K f) : field(std::move(f)) {}

  int top() const { return static_cast<int>(dims.size()) - 1; }
  int dim(int d) const { return d >= 0 && d <= top() ? dims[d] : 0; }
  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
  const SparseRow<K>& mul(int d1, int i, int d2, int j) const { return table[d1][d2][i * dims[d2] + j]; }

  void allocate() {
    table.assign(dims.size(), {});
    for (int a = 0; a <= top(); ++a) {
      table[a].resize(dims.size());
      for (int b = 0; b <= top(); ++b) table[a][b].resize(static_cast<std::size_t>(dims[a]) * dims[b]);
    }
  }
};

/// A finite graded module M over a GradedAlgebra: degrees low..low+dims.size()-1.
template <class K>
struct GradedModuleData {
  int low = 0;
  std::vector<int> dims;
  // action[dr][dm - low][i * dim(dm) + j] = r_i * m_j in degree dr + dm
  std::vector<std::vector<std::vector<SparseRow<K>>>> action;

  int high() const { return low + static_cast<int>(dims.size()) - 1; }
  int dim(int d) const { return d >= low && d <= high() ? dims[d - low] : 0; }
  const SparseRow<K>& act(int dr, int i, int dm, int j) const {
    return action[dr][dm - low][i * dim(dm) + j];
  }
};

/// The residue field k in degree 0, killed by A_+.
template <class K>
GradedModuleData<K> residue_field_module(const GradedAlgebra<K>& A) {
  GradedModuleData<K> k;
  k.low = 0;
  k.dims = {1};
  k.action.assign(A.dims.size(), std::vector<std::vector<SparseRow<K>>>(1));
  for (int d = 0; d <= A.top(); ++d) k.action[d][0].resize(A.dims[d]);
  k.action[0][0][0] = {{0, A.field.one()}};
  return k;
}

/// A as a module over itself.
template <class K>
GradedModuleData<K> regular_module(const GradedAlgebra<K>& A) {
  GradedModuleData<K> m;
  m.low = 0;
  m.dims = A.dims;
  m.action = A.table;
  return m;
}

/// Artinian R from a Groebner basis: standard monomials, normal-form products.
template <class K>
GradedAlgebra<K> algebra_from_groebner(const RingPresentation<K>& R, const GroebnerBasis<K>& G) {
  int n = R.nvars();
  auto leads = G.leads();
  if (monomial_krull_dim(leads, n) != 0) throw std::invalid_argument("algebra_from_groebner needs an Artinian ring");
  GradedAlgebra<K> A(R.ring.field());
  std::vector<std::vector<Monomial>> basis;
  for (int d = 0;; ++d) {
    std::vector<Monomial> b;
    for (const auto& m : monomials_of_degree(n, d)) {
      bool in = false;
      for (const auto& l : leads)
        if (l.divides(m)) {
          in = true;
          break;
        }
      if (!in) b.push_back(m);
    }
    if (b.empty()) break;
    basis.push_back(std::move(b));
  }
  for (const auto& b : basis) A.dims.push_back(static_cast<int>(b.size()));
  std::vector<std::map<Monomial, int>> index(basis.size());
  for (std::size_t d = 0; d < basis.size(); ++d)
    for (std::size_t i = 0; i < basis[d].size(); ++i) index[d][basis[d][i]] = static_cast<int>(i);
  A.allocate();
  const K& F = A.field;
  for (int a = 0; a <= A.top(); ++a)
    for (int b = 0; a + b <= A.top(); ++b)
      for (int i = 0; i < A.dims[a]; ++i)
        for (int j = 0; j < A.dims[b]; ++j) {
          auto nf = normal_form(R.ring, R.ring.term(basis[a][i] * basis[b][j], F.one()), G);
          SparseRow<K> row;
          for (const auto& t : nf.terms()) row.emplace_back(index[a + b].at(t.mono), t.coeff);
          std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          A.table[a][b][i * A.dims[b] + j] = std::move(row);
        }
  return A;
}

/// Artinian R from Macaulay matrices: I_d is the span of the m * g, R_d is
/// spanned by the non-pivot monomials of its reduced echelon form.
template <class K>
GradedAlgebra<K> algebra_from_presentation(const RingPresentation<K>& R, int max_degree = 64) {
  int n = R.nvars();
  const K& F = R.ring.field();
  GradedAlgebra<K> A(F);
  struct Level {
    std::map<Monomial, int> column;
    std::vector<int> basis;  // columns that are not pivots
    std::map<int, int> basis_index;
    DenseMatrix<K> rows;
    std::vector<int> pivots;
    std::vector<Monomial> monos;
  };
  std::vector<Level> levels;
  for (int d = 0;; ++d) {
    if (d > max_degree) throw std::invalid_argument("algebra_from_presentation needs an Artinian ring");
    Level L;
    L.monos = monomials_of_degree(n, d);
    for (int c = 0; c < static_cast<int>(L.monos.size()); ++c) L.column[L.monos[c]] = c;
    int nc = static_cast<int>(L.monos.size());
    for (const auto& g : R.generators) {
      if (g.is_zero() || g.degree() > d) continue;
      for (const auto& m : monomials_of_degree(n, d - g.degree())) {
        std::vector<typename K::Element> row(nc, F.zero());
        for (const auto& t : g.terms()) row[L.column.at(t.mono * m)] = t.coeff;
        L.rows.push_back(std::move(row));
      }
    }
    L.pivots = rref(F, L.rows, nc);
    std::vector<char> piv(nc, 0);
    for (int p : L.pivots) piv[p] = 1;
    for (int c = 0; c < nc; ++c)
      if (!piv[c]) {
        L.basis_index[c] = static_cast<int>(L.basis.size());
        L.basis.push_back(c);
      }
    if (L.basis.empty()) break;
    A.dims.push_back(static_cast<int>(L.basis.size()));
    levels.push_back(std::move(L));
  }
  A.allocate();
  for (int a = 0; a <= A.top(); ++a)
    for (int b = 0; a + b <= A.top(); ++b) {
      const Level& T = levels[a + b];
      std::map<int, int> pivot_row;
      for (std::size_t r = 0; r < T.pivots.size(); ++r) pivot_row[T.pivots[r]] = static_cast<int>(r);
      for (int i = 0; i < A.dims[a]; ++i)
        for (int j = 0; j < A.dims[b]; ++j) {
          Monomial m = levels[a].monos[levels[a].basis[i]] * levels[b].monos[levels[b].basis[j]];
          int c = T.column.at(m);
          SparseRow<K> row;
          auto it = T.basis_index.find(c);
          if (it != T.basis_index.end()) {
            row.emplace_back(it->second, F.one());
          } else {
            // m = -(non-pivot part of its row)
            const auto& pr = T.rows[pivot_row.at(c)];
            for (int q : T.basis)
              if (!F.is_zero(pr[q])) row.emplace_back(T.basis_index.at(q), F.neg(pr[q]));
          }
          A.table[a][b][i * A.dims[b] + j] = std::move(row);
        }
    }
  return A;
}

/// omega = Hom_k(A, k) placed in degrees 1..s+1 (s the top degree): omega_j = (A_{s+1-j})^*,
/// with (r . e_b^*)(c) = coefficient of b in r c.
template <class K>
GradedModuleData<K> dual_module(const GradedAlgebra<K>& A) {
  int s = A.top();
  GradedModuleData<K> w;
  w.low = 1;
  for (int j = 1; j <= s + 1; ++j) w.dims.push_back(A.dims[s + 1 - j]);
  w.action.assign(A.dims.size(), std::vector<std::vector<SparseRow<K>>>(w.dims.size()));
  for (int dr = 0; dr <= s; ++dr)
    for (int j = 1; j <= s + 1; ++j) {
      auto& cell = w.action[dr][j - 1];
      cell.resize(static_cast<std::size_t>(A.dims[dr]) * w.dim(j));
      int target = j + dr;  // r . e_b^* lives in omega_{j+dr} = (A_{s+1-j-dr})^*
      if (target > s + 1) continue;
      int cdeg = s + 1 - target;
      for (int i = 0; i < A.dims[dr]; ++i)
        for (int b = 0; b < w.dim(j); ++b) {
          SparseRow<K> row;
          for (int c = 0; c < A.dims[cdeg]; ++c)
            for (const auto& [idx, v] : A.mul(dr, i, cdeg, c))
              if (idx == b) row.emplace_back(c, v);
          cell[i * w.dim(j) + b] = std::move(row);
        }
    }
  return w;
}

/// The trivial extension A x M with M * M = 0, graded by the degrees of A and M.
/// M must live in degrees >= 1.
template <class K>
GradedAlgebra<K> trivial_extension(const GradedAlgebra<K>& A, const GradedModuleData<K>& M) {
  if (M.low < 1) throw std::invalid_argument("trivial_extension needs a module in positive degrees");
  GradedAlgebra<K> E(A.field);
  int top = std::max(A.top(), M.high());
  for (int d = 0; d <= top; ++d) E.dims.push_back(A.dim(d) + M.dim(d));
  E.allocate();
  // basis of E_d: first A_d, then M_d
  for (int a = 0; a <= top; ++a)
    for (int b = 0; a + b <= top; ++b) {
      int off = A.dim(a + b);
      for (int i = 0; i < E.dims[a]; ++i)
        for (int j = 0; j < E.dims[b]; ++j) {
          bool ia = i < A.dim(a), jb = j < A.dim(b);
          SparseRow<K> row;
          if (ia && jb) {
            row = A.mul(a, i, b, j);
          } else if (ia && !jb) {
            for (const auto& [k, v] : M.act(a, i, b, j - A.dim(b))) row.emplace_back(off + k, v);
          } else if (!ia && jb) {
            for (const auto& [k, v] : M.act(b, j, a, i - A.dim(a))) row.emplace_back(off + k, v);
          }
          E.table[a][b][i * E.dims[b] + j] = std::move(row);
        }
    }
  return E;
}

/// Tor^A_i(k, M)_j for i <= N, j <= jmax from the normalized bar complex
/// (A_+)^{(x) i} (x) M with
/// d(a_1|...|a_i|m) = sum_k (-1)^k (..|a_k a_{k+1}|..|m) + (-1)^i (a_1|...|a_{i-1}|a_i m).
template <class K>
class BarComplex {
 public:
  BarComplex(GradedAlgebra<K> A, GradedModuleData<K> M, const Limits& limits = {})
      : A_(std::move(A)), M_(std::move(M)), limits_(limits) {}

  BettiTable homology(int N, int jmax) {
    BettiTable b;
    b.bound(N, jmax);
    for (int j = 0; j <= jmax; ++j)
      for (int i = 0; i <= N; ++i) {
        long long dimB = space(i, j).total;
        if (dimB == 0) continue;
        long long ri = i == 0 ? 0 : rank(i, j, -1);
        long long kernel = dimB - ri;
        long long rnext = rank(i + 1, j, kernel);
        if (kernel - rnext) b.set(i, j, kernel - rnext);
      }
    return b;
  }

  /// dim_k of (A_+)^{(x) i} (x) M in internal degree j.
  long long chain_dim(int i, int j) { return space(i, j).total; }

 private:
  struct Space {
    std::map<std::vector<int>, long long> offset;  // (d_1..d_i, e) -> first index
    long long total = 0;
  };

  Space& space(int i, int j) {
    auto key = std::make_pair(i, j);
    auto it = spaces_.find(key);
    if (it != spaces_.end()) return it->second;
    Space s;
    std::vector<int> shape(i + 1);
    enumerate(s, shape, 0, j);
    if (limits_.max_entries && s.total > static_cast<long long>(limits_.max_entries))
      throw ResourceExceeded("bar complex space of dimension " + std::to_string(s.total));
    return spaces_.emplace(key, std::move(s)).first->second;
  }

  void enumerate(Space& s, std::vector<int>& shape, int pos, int remaining) {
    int i = static_cast<int>(shape.size()) - 1;
    if (pos == i) {
      if (M_.dim(remaining) == 0) return;
      shape[pos] = remaining;
      long long size = M_.dim(remaining);
      for (int k = 0; k < i; ++k) size *= A_.dim(shape[k]);
      s.offset[shape] = s.total;
      s.total += size;
      return;
    }
    for (int d = 1; d <= A_.top() && d <= remaining; ++d) {
      if (A_.dim(d) == 0) continue;
      shape[pos] = d;
      enumerate(s, shape, pos + 1, remaining - d);
    }
  }

  int block_dim(const std::vector<int>& shape, int k) const {
    int i = static_cast<int>(shape.size()) - 1;
    return k == i ? M_.dim(shape[k]) : A_.dim(shape[k]);
  }

  /// Rank of d: B_{i,j} -> B_{i-1,j}. `cap` (if >= 0) is the dimension of the
  /// kernel of the next map, an upper bound because d^2 = 0; reaching it ends the scan.
  long long rank(int i, int j, long long cap) {
    auto key = std::make_pair(i, j);
    auto it = ranks_.find(key);
    if (it != ranks_.end()) return it->second;
    Space& src = space(i, j);
    Space& tgt = space(i - 1, j);
    if (src.total == 0 || tgt.total == 0 || cap == 0) return ranks_[key] = 0;
    const K& F = A_.field;
    RowEchelon<K> ech(F, static_cast<int>(tgt.total));
    Stopwatch clock;
    std::vector<int> idx(i + 1);
    for (const auto& [shape, off] : src.offset) {
      std::vector<int> dims(i + 1);
      long long size = 1;
      for (int k = 0; k <= i; ++k) size *= (dims[k] = block_dim(shape, k));
      for (long long flat = 0; flat < size; ++flat) {
        long long rem = flat;
        for (int k = i; k >= 0; --k) {
          idx[k] = static_cast<int>(rem % dims[k]);
          rem /= dims[k];
        }
        auto row = boundary(shape, idx, tgt);
        if (row.empty()) continue;
        ech.insert(row);
        if (cap >= 0 && ech.rank() >= cap) return ranks_[key] = ech.rank();
      }
      clock.check(limits_, "bar complex");
    }
    return ranks_[key] = ech.rank();
  }

  SparseRow<K> boundary(const std::vector<int>& shape, const std::vector<int>& idx, Space& tgt) {
    const K& F = A_.field;
    int i = static_cast<int>(shape.size()) - 1;
    std::map<int, typename K::Element> acc;
    auto emit = [&](const std::vector<int>& tshape, int merged, const SparseRow<K>& prod, bool sign_neg) {
      if (prod.empty()) return;
      auto oit = tgt.offset.find(tshape);
      if (oit == tgt.offset.end()) return;
      // flat index with the merged slot varying over `prod`
      int m = static_cast<int>(tshape.size()) - 1;
      std::vector<int> tidx(m + 1);
      for (int k = 0, s = 0; k <= m; ++k, ++s) {
        if (k == merged) {
          ++s;
          tidx[k] = 0;
          continue;
        }
        tidx[k] = idx[s];
      }
      for (const auto& [p, v] : prod) {
        tidx[merged] = p;
        long long flat = 0;
        for (int k = 0; k <= m; ++k) {
          int dk = k == m ? M_.dim(tshape[k]) : A_.dim(tshape[k]);
          flat = flat * dk + tidx[k];
        }
        auto& slot = acc.try_emplace(static_cast<int>(oit->second + flat), F.zero()).first->second;
        slot = sign_neg ? F.sub(slot, v) : F.add(slot, v);
      }
    };
    std::vector<int> tshape(i);
    for (int k = 0; k < i; ++k) {
      // merge positions k and k+1 (k+1 may be the module slot)
      int d = shape[k] + shape[k + 1];
      for (int q = 0, s = 0; q < i; ++q, ++s) {
        if (q == k) {
          tshape[q] = d;
          ++s;
        } else {
          tshape[q] = shape[s];
        }
      }
      bool to_module = k + 1 == i;
      if (!to_module && d > A_.top()) continue;
      if (to_module && M_.dim(d) == 0) continue;
      const SparseRow<K>& prod =
          to_module ? M_.act(shape[k], idx[k], shape[k + 1], idx[k + 1]) : A_.mul(shape[k], idx[k], shape[k + 1], idx[k + 1]);
      emit(tshape, k, prod, (k + 1) % 2 == 1);
    }
    SparseRow<K> out;
    for (auto& [c, v] : acc)
      if (!F.is_zero(v)) out.emplace_back(c, v);
    return out;
  }

  GradedAlgebra<K> A_;
  GradedModuleData<K> M_;
  Limits limits_;
  std::map<std::pair<int, int>, Space> spaces_;
  std::map<std::pair<int, int>, long long> ranks_;
};

/// beta^A_{i,j}(M) = dim Tor^A_i(k, M)_j for i <= N, j <= jmax.
template <class K>
BettiTable bar_homology(const GradedAlgebra<K>& A, const GradedModuleData<K>& M, int N, int jmax,
                        const Limits& limits = {}) {
  BarComplex<K> bar(A, M, limits);
  return bar.homology(N, jmax);
}

/// beta^A_{i,j}(k).
template <class K>
BettiTable bar_homology(const GradedAlgebra<K>& A, int N, int jmax, const Limits& limits = {}) {
  auto k = residue_field_module(A);
  return bar_homology(A, k, N, jmax, limits);
}

}  // namespace nagata

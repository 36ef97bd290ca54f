#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nagata/core/monomial.hpp"

namespace nagata {

/// Integer polynomial, coefficient of t^i at index i. Arithmetic throws on int64 overflow.
using IntPoly = std::vector<std::int64_t>;

IntPoly intpoly_add(const IntPoly& a, const IntPoly& b);
IntPoly intpoly_sub(const IntPoly& a, const IntPoly& b);
IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b);
/// Exact division by (1 - t); throws if not exact.
IntPoly intpoly_div_one_minus_t(const IntPoly& a);
bool intpoly_divisible_by_one_minus_t(const IntPoly& a);
void intpoly_trim(IntPoly& a);
std::int64_t intpoly_eval_one(const IntPoly& a);
std::string intpoly_to_string(const IntPoly& a, const std::string& var = "t");

/// Numerator K(t) of the Hilbert series K(t)/(1-t)^n of S/(gens), by the pivot recursion
/// K(I) = K(I + (x)) + t K(I : x).
IntPoly hilbert_numerator(const std::vector<Monomial>& gens, int n);

/// Krull dimension of S/(gens): the largest set of variables containing no generator's support.
int monomial_krull_dim(const std::vector<Monomial>& gens, int n);

struct HilbertData {
  IntPoly numerator;  // K(t) over (1-t)^n
  int nvars = 0;
  int dim = 0;
  IntPoly h;          // K(t) / (1-t)^(n-dim)
  int a_invariant = 0;  // deg h - dim

  std::int64_t multiplicity() const { return intpoly_eval_one(h); }
  /// dim_k R_d for d = 0..dmax.
  std::vector<std::int64_t> hilbert_function(int dmax) const;
};

/// Hilbert data of S/I from its initial ideal. The dimension comes from the
/// variable subsets and is cross-checked against the order of the pole at t = 1.
HilbertData hilbert_series(const std::vector<Monomial>& initial_ideal, int n);

}  // namespace nagata

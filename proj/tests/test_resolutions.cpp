#include "doctest.h"

#include "nagata/resolutions/resolution.hpp"
#include "oracles.hpp"

using namespace nagata;

namespace {

using P = PrimeField;
using Q = RationalField;

template <class K>
RingPresentation<K> pres(K field, std::vector<std::string> vars, std::vector<std::string> gens) {
  return RingPresentation<K>::parse(PolyRing<K>(field, std::move(vars)), gens);
}

const std::vector<std::string> kEx42Vars{"x", "y", "z", "w"};
const std::vector<std::string> kEx42{"x^2", "y^2", "z^2", "w^2", "x*y+z*w"};
const std::vector<std::string> kRoosVars{"x", "y", "z", "w", "u", "v"};
const std::vector<std::string> kRoos{"x^2", "y^2", "z^2", "u^2", "v^2", "w^2", "x*y", "y*z", "u*v", "v*w",
                                     "x*z+3*z*w-u*w", "z*w+x*u+u*w"};

// Betti numbers by iterating minimal syzygies with the module Groebner engine.
template <class K>
BettiTable iterated_betti(const RingPresentation<K>& R) {
  BettiTable b;
  b.set(0, 0, 1);
  auto G = buchberger(R);
  GradedFreeModule src;
  for (const auto& g : G.minimal_generators) src.twists.push_back(g.degree());
  GradedMatrix<K> M(src, GradedFreeModule{{0}});
  for (int i = 0; i < src.rank(); ++i) M.set(0, i, G.minimal_generators[i]);
  for (int i = 1; M.cols() > 0; ++i) {
    for (int t : M.source().twists) b.add(i, t, 1);
    M = syzygies(R.ring, M);
  }
  return b;
}

template <class K>
bool has_unit_entry(const FreeResolution<K>& res) {
  for (const auto& d : res.differentials)
    for (int c = 0; c < d.cols(); ++c)
      for (const auto& [r, p] : d.column(c))
        if (p.degree() == 0) return true;
  return false;
}

// sum_i (-1)^i sum_j beta_{i,j} binom(n-1+d-j, n-1) == HF(S/I, d)
template <class K>
void check_euler(const RingPresentation<K>& R, const BettiTable& b, int dmax) {
  int n = R.nvars();
  for (int d = 0; d <= dmax; ++d) {
    long long chi = 0;
    for (const auto& [k, v] : b.entries()) {
      auto [i, j] = k;
      if (j > d) continue;
      long long dim = static_cast<long long>(monomials_of_degree(n, d - j).size());
      chi += (i % 2 ? -1 : 1) * v * dim;
    }
    CHECK(chi == oracle::hilbert_function(R.ring, R.generators, d));
  }
}

}  // namespace

TEST_CASE("hypersurface and polynomial ring") {
  auto R = pres(Q{}, {"x", "y"}, {"x"});
  auto res = resolve_over_poly(R);
  auto b = betti_table(res);
  CHECK(b.at(0, 0) == 1);
  CHECK(b.at(1, 1) == 1);
  CHECK(b.sum() == 2);

  auto S = pres(Q{}, {"x", "y"}, {});
  auto bs = betti_table(resolve_over_poly(S));
  CHECK(bs.regularity() == 0);
  CHECK(bs.proj_dim() == 0);
}

TEST_CASE("example ideal: printed Betti table") {
  for (int pass = 0; pass < 2; ++pass) {
    BettiTable b;
    if (pass == 0) {
      auto R = pres(P(32003), kEx42Vars, kEx42);
      auto res = resolve_over_poly(R);
      CHECK(is_complex(R.ring, res));
      CHECK_FALSE(has_unit_entry(res));
      b = betti_table(res);
      check_euler(R, b, 6);
    } else {
      auto R = pres(Q{}, kEx42Vars, kEx42);
      b = betti_table(resolve_over_poly(R));
    }
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(1, 2) == 5);
    CHECK(b.at(2, 4) == 15);
    CHECK(b.at(3, 5) == 16);
    CHECK(b.at(4, 6) == 5);
    CHECK(b.sum() == 42);
    CHECK(b.regularity() == 2);
    CHECK(b.proj_dim() == 4);
  }
}

TEST_CASE("frame, pruning and iterated syzygies agree") {
  std::vector<RingPresentation<P>> rings{
      pres(P(32003), kEx42Vars, kEx42),
      pres(P(32003), {"a", "b", "c"}, {"a^2", "b^2", "c^2"}),
      pres(P(32003), {"a", "b", "c"}, {"a*b", "a*c", "b*c"}),
      pres(P(32003), {"a", "b", "c", "d"}, {"a*d-b*c", "a^2-b*d", "c^2-a*b"}),
      pres(P(32003), {"a", "b", "c", "d", "e", "f", "g", "h", "i"},
           {"a*e-b*d", "a*f-c*d", "b*f-c*e", "a*h-b*g", "a*i-c*g", "b*i-c*h", "d*h-e*g", "d*i-f*g", "e*i-f*h"}),
  };
  for (const auto& R : rings) {
    auto G = buchberger(R);
    auto frame = schreyer_resolution(R.ring, G);
    CHECK(frame.length() <= R.nvars());
    CHECK(is_complex(R.ring, frame));
    auto pruned = minimalize(R.ring, frame);
    CHECK(is_complex(R.ring, pruned));
    CHECK_FALSE(has_unit_entry(pruned));
    auto b = betti_table(pruned);
    CHECK(b == frame_betti(R.ring, G));
    CHECK(b == betti_table(resolve_over_poly(R)));
    CHECK(b == iterated_betti(R));
    check_euler(R, b, 5);
  }
}

TEST_CASE("Roos ring: printed Betti table") {
  auto R = pres(P(32003), kRoosVars, kRoos);
  auto res = resolve_over_poly(R);
  CHECK(is_complex(R.ring, res));
  auto b = betti_table(res);
  CHECK(b.row(1) == std::map<int, std::int64_t>{{1, 12}, {2, 16}, {3, 2}});
  CHECK(b.row(2) == std::map<int, std::int64_t>{{2, 32}, {3, 96}, {4, 100}, {5, 48}, {6, 9}});
  CHECK(b.regularity() == 2);
  CHECK(b == frame_betti(R.ring, buchberger(R)));
}

TEST_CASE("minimalize") {
  PolyRing<Q> r(Q{}, {"x"});
  FreeResolution<Q> triv;
  triv.modules = {GradedFreeModule{{0}}, GradedFreeModule{{0}}};
  GradedMatrix<Q> one({{0}}, {{0}});
  one.set(0, 0, r.one());
  triv.differentials.push_back(one);
  auto m = minimalize(r, triv);
  CHECK(m.length() == 0);
  CHECK(m.modules.front().rank() == 0);

  auto R = pres(Q{}, {"x", "y"}, {"x^2", "y^2"});
  auto res = resolve_over_poly(R);
  auto again = minimalize(R.ring, res);
  CHECK(betti_table(again) == betti_table(res));
  CHECK_THROWS(betti_table(schreyer_resolution(R.ring, buchberger(R))));
}

TEST_CASE("Betti table printing and bounds") {
  BettiTable b;
  b.set(0, 0, 1);
  b.set(1, 2, 5);
  b.set(2, 4, 15);
  CHECK(b.to_string().find("1:") != std::string::npos);
  BettiTable t;
  t.bound(2, 3);
  t.set(0, 0, 1);
  CHECK(t.get(1, 1).value() == 0);
  CHECK_FALSE(t.get(1, 4).has_value());
  CHECK_FALSE(t.get(3, 3).has_value());
  CHECK(t.to_string().find('?') != std::string::npos);
}

TEST_CASE("resolving the residue field over R") {
  auto S = pres(Q{}, {"a", "b", "c"}, {});
  auto b = resolve_k_over_quotient(S, 4, 8);
  for (int i = 0; i <= 3; ++i) CHECK(b.at(i, i) == (i == 0 || i == 3 ? 1 : 3));
  CHECK(b.at(4, 4) == 0);
  CHECK(b.get(4, 4).has_value());
  CHECK_FALSE(b.get(4, 9).has_value());

  auto D = pres(Q{}, {"y"}, {"y^2"});
  auto bd = resolve_k_over_quotient(D, 5, 10);
  for (int i = 0; i <= 5; ++i) CHECK(bd.at(i, i) == 1);
  CHECK(bd.sum() == 6);
  CHECK_THROWS(resolve_k_over_quotient(D, 3, 2));
}

TEST_CASE("Gorenstein symmetry on a complete intersection") {
  auto R = pres(P(32003), {"a", "b", "c"}, {"a^2", "b^2", "c^2"});
  auto b = betti_table(resolve_over_poly(R));
  // a = socle degree 3, n = 3
  CHECK(check_betti_symmetry(b, 3, 6));
  CHECK_FALSE(check_betti_symmetry(b, 3, 5));
}

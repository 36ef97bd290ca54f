#include "doctest.h"

#include "nagata/invariants/invariants.hpp"
#include "oracles.hpp"

using namespace nagata;

namespace {

using P = PrimeField;
using Q = RationalField;

template <class K>
RingPresentation<K> pres(K field, std::vector<std::string> vars, std::vector<std::string> gens) {
  return RingPresentation<K>::parse(PolyRing<K>(field, std::move(vars)), gens);
}

template <class K>
InvariantReport report(const RingPresentation<K>& R) {
  auto G = buchberger(R);
  return basic_invariants(R, G, betti_table(resolve_over_poly(R)));
}

const std::vector<std::string> kEx42Vars{"x", "y", "z", "w"};
const std::vector<std::string> kEx42{"x^2", "y^2", "z^2", "w^2", "x*y+z*w"};
const std::vector<std::string> kRoosVars{"x", "y", "z", "w", "u", "v"};
const std::vector<std::string> kRoos{"x^2", "y^2", "z^2", "u^2", "v^2", "w^2", "x*y", "y*z", "u*v", "v*w",
                                     "x*z+3*z*w-u*w", "z*w+x*u+u*w"};

// h-polynomial from Betti numbers: sum (-1)^i beta_{i,j} t^j divided by (1-t)^codim
IntPoly h_from_betti(const BettiTable& b, int codim) {
  IntPoly k;
  for (const auto& [key, v] : b.entries()) {
    auto [i, j] = key;
    if (static_cast<int>(k.size()) <= j) k.resize(j + 1, 0);
    k[j] += (i % 2 ? -1 : 1) * v;
  }
  intpoly_trim(k);
  for (int c = 0; c < codim; ++c) k = intpoly_div_one_minus_t(k);
  return k;
}

}  // namespace

TEST_CASE("Hilbert numerators") {
  CHECK(hilbert_numerator({}, 3) == IntPoly{1});
  auto hd = hilbert_series({}, 3);
  CHECK(hd.dim == 3);
  CHECK(hd.h == IntPoly{1});
  // (x^2, y^2) in k[x,y]: (1 - t^2)^2
  IntPoly want{1, 0, -2, 0, 1};
  CHECK(hilbert_numerator({Monomial(2, {2, 0}), Monomial(2, {0, 2})}, 2) == want);
  CHECK(intpoly_to_string(IntPoly{1, -2, 0, 1}) == "1 - 2t + t^3");
}

TEST_CASE("Hilbert series agree with brute-force counting on random monomial ideals") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> ed(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 4;
    std::vector<Monomial> gens;
    for (int k = 0; k < 2 + trial % 5; ++k) {
      std::vector<int> e(n);
      for (auto& x : e) x = ed(rng);
      Monomial m(n, e);
      if (!m.is_one()) gens.push_back(m);
    }
    auto hd = hilbert_series(gens, n);
    auto hf = hd.hilbert_function(7);
    for (int d = 0; d <= 7; ++d) CHECK(hf[d] == oracle::standard_monomials(n, gens, d));
  }
}

TEST_CASE("example ideal invariants") {
  auto R = pres(P(32003), kEx42Vars, kEx42);
  auto rep = report(R);
  CHECK(rep.hilbert.h == IntPoly{1, 4, 5});
  CHECK(rep.artinian);
  CHECK(rep.codim == 4);
  CHECK(rep.reg == 2);
  CHECK(rep.pd == 4);
  CHECK(rep.type == 5);
  CHECK(rep.cohen_macaulay);
  CHECK(rep.level);
  CHECK_FALSE(rep.gorenstein);
  CHECK(rep.quadratic);
  CHECK(rep.almost_complete_intersection);
  CHECK_FALSE(rep.complete_intersection);
  CHECK(check_reg_le_pd(rep) == RegPdClass::Strict);
  CHECK(rep.reg == rep.a_invariant + rep.dim);
  CHECK(h_from_betti(rep.betti, rep.codim) == rep.hilbert.h);
  CHECK(socle(R, buchberger(R)) == std::vector<int>{0, 0, 5});
}

TEST_CASE("Roos ring invariants") {
  auto R = pres(P(32003), kRoosVars, kRoos);
  auto rep = report(R);
  CHECK(rep.hilbert.h == IntPoly{1, 6, 9});
  CHECK(rep.cohen_macaulay);
  CHECK(rep.type == 9);
  CHECK(rep.pd == 6);
  CHECK(check_reg_le_pd(rep) == RegPdClass::Strict);
  CHECK(socle(R, buchberger(R)) == std::vector<int>{0, 0, 9});
  CHECK(h_from_betti(rep.betti, rep.codim) == rep.hilbert.h);
}

TEST_CASE("complete intersections") {
  auto R = pres(Q{}, {"a", "b", "c"}, {"a^2", "b^2", "c^2"});
  auto rep = report(R);
  CHECK(rep.gorenstein);
  CHECK(rep.level);
  CHECK(rep.complete_intersection);
  CHECK(rep.superlevel.value());
  CHECK(rep.type == 1);
  CHECK(check_reg_le_pd(rep) == RegPdClass::CiEquality);
  auto x3 = pres(Q{}, {"x"}, {"x^3"});
  CHECK(socle(x3, buchberger(x3)) == std::vector<int>{0, 0, 1});
  auto S = pres(Q{}, {"x", "y"}, {});
  CHECK_THROWS(socle(S, buchberger(S)));
}

TEST_CASE("reg-pd classification flags inconsistent reports") {
  InvariantReport r;
  r.reg = 3;
  r.pd = 2;
  CHECK(check_reg_le_pd(r) == RegPdClass::Violation);
  r.reg = 2;
  r.complete_intersection = false;
  CHECK(check_reg_le_pd(r) == RegPdClass::Violation);
}

TEST_CASE("Artinian reduction") {
  auto A = pres(P(32003), kEx42Vars, kEx42);
  auto same = artinian_reduction(A, 1);
  CHECK(same.ring.nvars() == 4);

  auto R = pres(P(32003), {"x", "y"}, {"x*y"});
  auto red = artinian_reduction(R, 7);
  CHECK(red.ring.nvars() == 1);
  auto G = buchberger(red.ring);
  CHECK(hilbert_series(G.leads(), 1).h == IntPoly{1, 1});

  // one-dimensional CM ring: three points in P^2
  auto T = pres(P(32003), {"x", "y", "z"}, {"x*y", "x*z", "y*z"});
  auto GT = buchberger(T);
  auto hT = hilbert_series(GT.leads(), 3);
  CHECK(hT.dim == 1);
  auto rT = artinian_reduction(T, 3);
  auto GrT = buchberger(rT.ring);
  CHECK(hilbert_series(GrT.leads(), 2).h == hT.h);
  CHECK(betti_table(resolve_over_poly(rT.ring)) == betti_table(resolve_over_poly(T)));
}

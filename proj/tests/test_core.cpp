#include "doctest.h"

#include <algorithm>
#include <random>

#include "nagata/core/graded_matrix.hpp"
#include "nagata/core/linalg.hpp"
#include "nagata/core/parse.hpp"

using namespace nagata;

namespace {

// Independent degrevlex: compare degree, then the last differing exponent, smaller wins.
int oracle_degrevlex(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

std::vector<std::vector<int>> all_quadratics(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<int> e(n, 0);
      e[i]++;
      e[j]++;
      out.push_back(e);
    }
  return out;
}

}  // namespace

TEST_CASE("field parsing and arithmetic") {
  CHECK(FieldSpec::parse("QQ").kind == FieldSpec::Kind::Rationals);
  CHECK(FieldSpec::parse("GF 32003").characteristic == 32003);
  CHECK(FieldSpec::parse("GF(7)").characteristic == 7);
  CHECK_THROWS(FieldSpec::parse("GF 9"));
  CHECK_THROWS(FieldSpec::parse("RR"));
  PrimeField f(32003);
  for (std::uint32_t a = 1; a < 2000; a += 7) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.lift(f.from_int(-5)) == -5);
  CHECK_THROWS(f.inv(0));
}

TEST_CASE("degrevlex basics") {
  Monomial a(2, {1, 1}), b(2, {2, 0});
  CHECK(compare_degrevlex(a, a) == 0);
  CHECK(compare_degrevlex(b, a) > 0);
  CHECK_THROWS(compare_degrevlex(Monomial(2), Monomial(3)));
}

TEST_CASE("smallest quadratic monomials agree with a brute-force sort") {
  for (int n : {2, 3, 4, 5, 7}) {
    auto q = all_quadratics(n);
    std::sort(q.begin(), q.end(), [](auto& x, auto& y) { return oracle_degrevlex(x, y) < 0; });
    for (int k = 1; k <= static_cast<int>(q.size()); ++k) {
      auto got = smallest_quadratic_monomials(n, k);
      REQUIRE(got.size() == static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) CHECK(got[i].exponents() == q[i]);
    }
    CHECK_THROWS(smallest_quadratic_monomials(n, static_cast<int>(q.size()) + 1));
  }
  auto s = smallest_quadratic_monomials(4, 7);
  std::vector<std::string> names{"x1", "x2", "x3", "x4"};
  std::vector<std::string> want{"x4^2", "x3*x4", "x2*x4", "x1*x4", "x3^2", "x2*x3", "x1*x3"};
  for (int i = 0; i < 7; ++i) CHECK(s[i].to_string(names) == want[i]);
  CHECK(smallest_quadratic_monomials(6, 1)[0].exponents() == std::vector<int>{0, 0, 0, 0, 0, 2});
  auto nine = smallest_quadratic_monomials(5, 9);
  for (int i = 0; i < 5; ++i) CHECK(nine[i][4] > 0);
  CHECK(nine[5].to_string({"x1", "x2", "x3", "x4", "x5"}) == "x4^2");
  CHECK(nine[8].to_string({"x1", "x2", "x3", "x4", "x5"}) == "x1*x4");
}

TEST_CASE("degrevlex is a total order agreeing with the oracle on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> ed(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + trial % 20;
    std::vector<int> ea(n), eb(n), ec(n);
    for (int i = 0; i < n; ++i) ea[i] = ed(rng), eb[i] = ed(rng), ec[i] = ed(rng);
    Monomial a(n, ea), b(n, eb), c(n, ec);
    CHECK(a.cmp(b) == oracle_degrevlex(ea, eb));
    CHECK(a.cmp(b) == -b.cmp(a));
    if (a.cmp(b) < 0 && b.cmp(c) < 0) CHECK(a.cmp(c) < 0);
    bool div = true;
    for (int i = 0; i < n; ++i) div = div && ea[i] <= eb[i];
    CHECK(a.divides(b) == div);
    bool cop = true;
    for (int i = 0; i < n; ++i) cop = cop && (ea[i] == 0 || eb[i] == 0);
    CHECK(a.coprime(b) == cop);
    if (div) CHECK((b / a) * a == b);
  }
}

TEST_CASE("polynomial arithmetic") {
  PolyRing<RationalField> q(RationalField{}, {"x", "y", "z", "w"});
  auto f = parse_polynomial(q, "x*y + z*w");
  auto g = parse_polynomial(q, "-x*y - z*w");
  CHECK(q.add(f, g).is_zero());

  PolyRing<PrimeField> f2(PrimeField(2), {"x", "y"});
  auto p = f2.mul(parse_polynomial(f2, "x+y"), parse_polynomial(f2, "x-y"));
  CHECK(p == parse_polynomial(f2, "x^2+y^2"));

  PolyRing<RationalField> r(RationalField{}, {"x1", "x2", "x3", "x4"});
  auto s = r.substitute(parse_polynomial(r, "x4^2"), 3, parse_polynomial(r, "x1+2*x2"));
  CHECK(s == parse_polynomial(r, "x1^2+4*x1*x2+4*x2^2"));
  CHECK(r.to_string(s) == "x1^2 + 4*x1*x2 + 4*x2^2");

  PolyRing<RationalField> other(RationalField{}, {"x", "y"});
  CHECK_THROWS(r.add(s, parse_polynomial(other, "x")));
}

TEST_CASE("parser errors carry positions") {
  PolyRing<RationalField> q(RationalField{}, {"x", "y"});
  try {
    parse_polynomial(q, "x + 2*zz", 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_polynomial(q, "x + (y"), ParseError);
  CHECK(parse_polynomial(q, "3(x+y)^2") == parse_polynomial(q, "3*x^2+6*x*y+3*y^2"));
}

TEST_CASE("prime field arithmetic agrees with QQ reduced mod p") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> cd(-50, 50), ed(0, 2);
  PolyRing<RationalField> q(RationalField{}, {"a", "b", "c"});
  PolyRing<PrimeField> fp(PrimeField(101), {"a", "b", "c"});
  auto reduce = [&](const Polynomial<RationalField>& p) {
    std::vector<Term<PrimeField>> ts;
    for (const auto& t : p.terms()) ts.push_back({t.mono, fp.field().from_mpz(t.coeff.get_num())});
    return fp.from_terms(ts);
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Term<RationalField>> a, b;
    for (int k = 0; k < 4; ++k) {
      a.push_back({Monomial(3, {ed(rng), ed(rng), ed(rng)}), mpq_class(cd(rng))});
      b.push_back({Monomial(3, {ed(rng), ed(rng), ed(rng)}), mpq_class(cd(rng))});
    }
    auto pa = q.from_terms(a), pb = q.from_terms(b);
    CHECK(reduce(q.mul(pa, pb)) == fp.mul(reduce(pa), reduce(pb)));
    CHECK(reduce(q.add(pa, pb)) == fp.add(reduce(pa), reduce(pb)));
  }
}

TEST_CASE("graded matrices: Koszul complex on two variables") {
  PolyRing<RationalField> r(RationalField{}, {"x", "y"});
  GradedMatrix<RationalField> d1({{1, 1}}, {{0}});
  d1.set(0, 0, r.var(0));
  d1.set(0, 1, r.var(1));
  GradedMatrix<RationalField> d2({{2}}, {{1, 1}});
  d2.set(0, 0, r.neg(r.var(1)));
  d2.set(1, 0, r.var(0));
  CHECK(compose(r, d1, d2).is_zero());
  auto id = GradedMatrix<RationalField>::identity(d1.source(), r);
  auto same = compose(r, d1, id);
  CHECK(same.at(0, 0) == d1.at(0, 0));
  CHECK(same.at(0, 1) == d1.at(0, 1));
  CHECK_THROWS(compose(r, d2, d2));
  CHECK_THROWS(d1.set(0, 0, parse_polynomial(r, "x^2")));
}

TEST_CASE("linear algebra") {
  PrimeField f(7);
  DenseMatrix<PrimeField> m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank_of(f, m, 3) == 2);
  auto ns = nullspace(f, m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    std::uint32_t s = 0;
    for (int c = 0; c < 3; ++c) s = f.add(s, f.mul(row[c], ns[0][c]));
    CHECK(s == 0);
  }
  RowEchelon<PrimeField> e(f, 3);
  CHECK(e.insert({{0, 1}, {1, 2}, {2, 3}}));
  CHECK_FALSE(e.insert({{0, 2}, {1, 4}, {2, 6}}));
  CHECK(e.insert({{1, 1}, {2, 1}}));
  CHECK(e.rank() == 2);
}

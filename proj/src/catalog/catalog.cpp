#include "nagata/catalog/catalog.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace nagata {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

CatalogEntry ex42() {
  CatalogEntry e;
  e.id = "ex42";
  e.description = "superlevel almost complete intersection of codimension 4 with h = (1,4,5)";
  e.vars = {"x", "y", "z", "w"};
  e.generators = {"x^2", "y^2", "z^2", "w^2", "x*y+z*w"};
  auto& x = e.expected;
  x.h = IntPoly{1, 4, 5};
  x.codim = 4;
  x.reg = 2;
  x.pd = 4;
  x.type = 5;
  x.level = true;
  x.superlevel = true;
  x.almost_complete_intersection = true;
  x.quadratic = true;
  x.koszul = false;
  x.betti_rows = {{0, {{0, 1}}}, {1, {{1, 5}}}, {2, {{2, 15}, {3, 16}, {4, 5}}}};
  x.idealization_h = IntPoly{1, 9, 9, 1};
  x.idealization_betti_rows = {
      {0, {{0, 1}}},
      {1, {{1, 36}, {2, 160}, {3, 330}, {4, 384}, {5, 260}, {6, 96}, {7, 15}}},
      {2, {{2, 15}, {3, 96}, {4, 260}, {5, 384}, {6, 330}, {7, 160}, {8, 36}}},
      {3, {{9, 1}}},
  };
  x.resolve_idealization = true;
  e.source = "published";
  return e;
}

CatalogEntry aci_family(int n) {
  if (n < 2 || n > 3) throw std::invalid_argument("aci-family is catalogued for n = 2, 3");
  CatalogEntry e;
  e.id = "aci-family(n=" + std::to_string(n) + ")";
  e.description = "squares of x_i, y_i plus sum x_i y_i";
  e.vars = numbered("x", n);
  auto ys = numbered("y", n);
  e.vars.insert(e.vars.end(), ys.begin(), ys.end());
  std::string sum;
  for (int i = 1; i <= n; ++i) {
    e.generators.push_back("x" + std::to_string(i) + "^2");
    e.generators.push_back("y" + std::to_string(i) + "^2");
    sum += (i > 1 ? "+" : "") + std::string("x") + std::to_string(i) + "*y" + std::to_string(i);
  }
  e.generators.push_back(sum);
  auto& x = e.expected;
  x.codim = 2 * n;
  x.reg = n;
  x.num_generators = 2 * n + 1;
  x.almost_complete_intersection = true;
  x.level = true;
  x.superlevel = true;
  x.quadratic = true;
  x.koszul = false;
  if (n == 2) {
    x.h = IntPoly{1, 4, 5};
    x.idealization_h = IntPoly{1, 9, 9, 1};
  } else {
    // killing a degree-2 Lefschetz element of (1+t)^6
    x.h = IntPoly{1, 6, 14, 14};
    x.idealization_h = IntPoly{1, 20, 28, 20, 1};
  }
  e.source = "published";
  return e;
}

CatalogEntry roos() {
  CatalogEntry e;
  e.id = "roos";
  e.description = "non-Koszul algebra of socle degree 2 with h = (1,6,9)";
  e.vars = {"x", "y", "z", "w", "u", "v"};
  e.generators = {"x^2", "y^2", "z^2", "u^2", "v^2", "w^2", "x*y", "y*z", "u*v", "v*w", "x*z+3*z*w-u*w", "z*w+x*u+u*w"};
  auto& x = e.expected;
  x.h = IntPoly{1, 6, 9};
  x.type = 9;
  x.reg = 2;
  x.level = true;
  x.superlevel = true;
  x.quadratic = true;
  x.betti_rows = {{1, {{1, 12}, {2, 16}, {3, 2}}}, {2, {{2, 32}, {3, 96}, {4, 100}, {5, 48}, {6, 9}}}};
  x.idealization_h = IntPoly{1, 15, 15, 1};
  e.source = "published";
  e.field_note = "stated in characteristic 0; verified over the chosen field";
  return e;
}

int max_index(const std::vector<std::string>& gens) {
  int n = 0;
  std::regex var("x(\\d+)");
  for (const auto& g : gens)
    for (std::sregex_iterator it(g.begin(), g.end(), var), end; it != end; ++it) n = std::max(n, std::stoi((*it)[1]));
  return n;
}

CatalogEntry figure2(int c) {
  CatalogEntry e;
  e.id = "figure2(c=" + std::to_string(c) + ")";
  e.description = "J plus the squares of the variables occurring in J";
  auto J = figure2_generators(c);
  int n = max_index(J);
  e.vars = numbered("x", n);
  std::set<int> used;
  std::regex var("x(\\d+)");
  for (const auto& g : J)
    for (std::sregex_iterator it(g.begin(), g.end(), var), end; it != end; ++it) used.insert(std::stoi((*it)[1]));
  e.generators = J;
  for (int i : used) e.generators.push_back("x" + std::to_string(i) + "^2");
  auto& x = e.expected;
  x.codim = n;
  x.reg = 2;
  x.codim_plus_type = c;
  x.level = true;
  x.superlevel = true;
  x.quadratic = true;
  x.idealization_h = IntPoly{1, c, c, 1};
  x.resolve_idealization = c <= 11;
  e.source = "published";
  e.field_note = "stated in characteristic 0; verified over the chosen field";
  return e;
}

CatalogEntry simple(std::string id, std::string description, std::vector<std::string> vars,
                    std::vector<std::string> gens, Expected x) {
  CatalogEntry e;
  e.id = std::move(id);
  e.description = std::move(description);
  e.vars = std::move(vars);
  e.generators = std::move(gens);
  e.expected = std::move(x);
  e.source = "standard";
  return e;
}

CatalogEntry generic_entry(int n, int g) {
  auto row = admissible_range(n);
  if (std::find(row.gs.begin(), row.gs.end(), g) == row.gs.end())
    throw std::invalid_argument("generic entry needs an admissible (n, g)");
  PrimeField F(kDefaultCharacteristic);
  auto s = generic_sample(n, g, 1, F);
  CatalogEntry e;
  e.id = "generic(n=" + std::to_string(n) + ",g=" + std::to_string(g) + ")";
  e.description = "seeded generic quadrics, seed " + std::to_string(s.seed_used);
  e.vars = s.ring.ring.names();
  for (const auto& p : s.ring.generators) e.generators.push_back(s.ring.ring.to_string(p));
  auto& x = e.expected;
  x.h = IntPoly{1, n, n * (n + 1) / 2 - g};
  x.reg = 2;
  x.level = true;
  x.superlevel = true;
  x.quadratic = true;
  x.koszul = false;
  int c = c_value(n, g);
  x.codim_plus_type = c;
  x.idealization_h = IntPoly{1, c, c, 1};
  x.resolve_idealization = c <= 9;
  e.source = "derived";
  e.field_note = "coefficients drawn for GF(32003)";
  return e;
}

}  // namespace

std::vector<std::string> figure2_generators(int c) {
  switch (c) {
    case 10:
      return {"x1*x5", "x1*x2", "x4*x5", "x3*x5+x1*x4+x4*x5", "x2*x4+x3*x5"};
    case 11:
      return {"x1*x5", "x1*x2", "x3*x5+x1*x4+x4*x5", "x2*x4+x3*x5"};
    case 14:
      return {"x1*x2", "x2*x3", "x4*x5", "x5*x6", "x1*x3+3*x3*x6-x4*x6", "x3*x6+x1*x4+x4*x6", "x2*x4+x3*x5"};
    case 18:
      return {"x1*x2+x2*x3",       "x4*x5",       "x5*x6", "x6*x7", "x1*x3+3*x3*x6-x4*x6",
              "x3*x6+x1*x4+x4*x6", "x2*x4+x3*x5", "x2*x5+x2*x7", "x1*x7", "x3*x7"};
    case 19:
      return {"x4*x5", "x5*x6", "x6*x7", "x2*x4+x3*x5", "x2*x5+x2*x7", "x1*x7", "x3*x7", "x7*x8", "x1*x8",
              "x3*x8", "x4*x8", "x6*x8", "x3*x5", "x2*x7", "x1*x2+x2*x3", "x1*x3+3*x3*x6-x4*x6",
              "x3*x6+x1*x4+x4*x6"};
    case 24:
      return {"x1*x2+x2*x3", "x4*x5", "x5*x6", "x6*x7", "x4*x9", "x5*x7", "x7*x9", "x1*x7", "x3*x7", "x7*x8",
              "x1*x8", "x2*x8", "x3*x8", "x5*x8", "x6*x8", "x1*x3+3*x3*x6-x4*x6", "x3*x6+x1*x4+x4*x6",
              "x2*x4+x3*x5", "x2*x5+x2*x7", "x2*x9+x1*x9", "x3*x9+x6*x9"};
    default:
      throw std::invalid_argument("no figure-2 entry for c = " + std::to_string(c));
  }
}

std::vector<std::string> catalog_ids() {
  return {"ex42",
          "aci-family(n=2)",
          "aci-family(n=3)",
          "roos",
          "figure2(c=10)",
          "figure2(c=11)",
          "figure2(c=14)",
          "figure2(c=18)",
          "figure2(c=19)",
          "figure2(c=24)",
          "dual-numbers",
          "max-ideal-square",
          "monomial-ci",
          "minors-2x2",
          "three-points",
          "generic(n=4,g=5)",
          "generic(n=5,g=7)",
          "generic(n=5,g=8)",
          "generic(n=6,g=10)",
          "generic(n=6,g=11)"};
}

CatalogEntry catalog(const std::string& id) {
  std::smatch m;
  if (id == "ex42") return ex42();
  if (id == "roos") return roos();
  if (std::regex_match(id, m, std::regex(R"(aci-family\(n=(\d+)\)|aci-(\d+))")))
    return aci_family(std::stoi(m[1].matched ? m[1].str() : m[2].str()));
  if (std::regex_match(id, m, std::regex(R"(figure2\(c=(\d+)\)|figure2-(\d+))")))
    return figure2(std::stoi(m[1].matched ? m[1].str() : m[2].str()));
  if (std::regex_match(id, m, std::regex(R"(generic\(n=(\d+),g=(\d+)\)|generic-(\d+)-(\d+))"))) {
    bool longform = m[1].matched;
    return generic_entry(std::stoi(longform ? m[1].str() : m[3].str()), std::stoi(longform ? m[2].str() : m[4].str()));
  }
  if (id == "dual-numbers") {
    Expected x;
    x.h = IntPoly{1, 1};
    x.gorenstein = true;
    x.complete_intersection = true;
    x.koszul = true;
    x.idealization_h = IntPoly{1, 2, 1};
    x.resolve_idealization = true;
    return simple(id, "k[y]/(y^2)", {"y"}, {"y^2"}, x);
  }
  if (id == "max-ideal-square") {
    Expected x;
    x.h = IntPoly{1, 2};
    x.type = 2;
    x.level = true;
    x.superlevel = true;
    x.koszul = true;
    x.idealization_h = IntPoly{1, 4, 1};
    x.resolve_idealization = true;
    return simple(id, "k[x,y]/(x,y)^2", {"x", "y"}, {"x^2", "x*y", "y^2"}, x);
  }
  if (id == "monomial-ci") {
    Expected x;
    x.h = IntPoly{1, 3, 3, 1};
    x.reg = 3;
    x.gorenstein = true;
    x.complete_intersection = true;
    x.koszul = true;
    x.idealization_h = IntPoly{1, 4, 6, 4, 1};
    x.resolve_idealization = true;
    return simple(id, "squares of three variables", {"a", "b", "c"}, {"a^2", "b^2", "c^2"}, x);
  }
  if (id == "minors-2x2") {
    Expected x;
    x.h = IntPoly{1, 4, 1};
    x.codim = 4;
    x.reg = 2;
    x.gorenstein = true;
    x.quadratic = true;
    x.koszul = true;
    x.idealization_h = IntPoly{1, 5, 5, 1};
    x.resolve_idealization = true;
    return simple(id, "2x2 minors of a generic 3x3 matrix", {"a", "b", "c", "d", "e", "f", "g", "h", "i"},
                  {"a*e-b*d", "a*f-c*d", "b*f-c*e", "a*h-b*g", "a*i-c*g", "b*i-c*h", "d*h-e*g", "d*i-f*g", "e*i-f*h"}, x);
  }
  if (id == "three-points") {
    Expected x;
    x.h = IntPoly{1, 2};
    x.codim = 2;
    x.reg = 1;
    x.type = 2;
    x.level = true;
    x.koszul = true;
    x.idealization_h = IntPoly{1, 4, 1};
    x.resolve_idealization = true;
    return simple(id, "three coordinate points of the projective plane", {"x", "y", "z"}, {"x*y", "x*z", "y*z"}, x);
  }
  throw std::invalid_argument("unknown catalog id '" + id + "'");
}

// ---------------------------------------------------------------- ranges

int g_min(int n) { return (n * n + 3 * n + 2 + 5) / 6; }
int g_max(int n) { return (n * n + 2 * n + 3) / 4 - 1; }
int c_value(int n, int g) { return (n * n + 3 * n) / 2 - g; }

RangeRow admissible_range(int n) {
  if (n < 1) throw std::invalid_argument("admissible_range needs n >= 1");
  RangeRow r;
  r.n = n;
  r.g_min = g_min(n);
  r.g_max = g_max(n);
  for (int g = r.g_min; g <= r.g_max; ++g) {
    r.gs.push_back(g);
    r.cs.push_back(c_value(n, g));
  }
  return r;
}

RangeReport gap_analysis(int c_max) {
  if (c_max < 9) throw std::invalid_argument("gap_analysis needs c_max >= 9");
  RangeReport rep;
  rep.c_max = c_max;
  // c(n, g_max(n)) grows like n^2/4, so rows past that point only add c > c_max
  for (int n = 4; c_value(n, g_max(n)) <= c_max; ++n) {
    auto row = admissible_range(n);
    for (int c : row.cs)
      if (c <= c_max) rep.covered.insert(c);
    rep.rows.push_back(std::move(row));
  }
  auto holds = [](int n) { return c_value(n, g_min(n)) >= c_value(n + 1, g_max(n + 1)) - 1; };
  // the difference is quadratic in n with positive leading term; 4 * c_max rows is far past its last sign change
  int last_fail = 3;
  for (int n = 4; n <= std::max(64, 4 * c_max); ++n)
    if (!holds(n)) last_fail = n;
  rep.no_gap_from_n = last_fail + 1;
  for (int n = 4; n < rep.no_gap_from_n; ++n)
    if (!holds(n)) rep.no_gap_fails.push_back(n);
  rep.threshold = c_value(rep.no_gap_from_n, g_max(rep.no_gap_from_n));
  for (int c = 9; c < rep.threshold && c <= c_max; ++c)
    if (!rep.covered.count(c)) rep.missing.insert(c);
  return rep;
}

std::string to_string(const IntPoly& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
  return s + ")";
}

std::string rows_to_string(const std::map<int, std::int64_t>& row) {
  std::string s;
  for (const auto& [i, v] : row) s += (s.empty() ? "" : " ") + std::to_string(i) + ":" + std::to_string(v);
  return s.empty() ? "-" : s;
}

}  // namespace nagata

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nagata/canonical/canonical.hpp"
#include "nagata/koszul/koszul.hpp"

namespace nagata {

using BettiRows = std::map<int, std::map<int, std::int64_t>>;

/// What a catalog entry is known to satisfy. Unset fields are not checked.
struct Expected {
  std::optional<IntPoly> h;
  std::optional<int> codim, reg, pd, type, num_generators, codim_plus_type;
  std::optional<bool> level, superlevel, gorenstein, complete_intersection, almost_complete_intersection, quadratic;
  std::optional<bool> koszul;  // false: a finite non-Koszul certificate must be found
  BettiRows betti_rows;
  std::optional<IntPoly> idealization_h;
  BettiRows idealization_betti_rows;
  bool resolve_idealization = false;  // full Betti table of the idealization
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::vector<std::string> vars;
  std::vector<std::string> generators;
  Expected expected;
  std::string source;      // "published", "derived" or "standard"
  std::string field_note;  // characteristic remarks, empty if none
};

/// Ids in a stable order.
std::vector<std::string> catalog_ids();

/// Accepts the canonical ids and the short forms aci-2, figure2-10, generic-4-5.
CatalogEntry catalog(const std::string& id);

/// Figure-2 list J for c in {10, 11, 14, 18, 19, 24}, verbatim.
std::vector<std::string> figure2_generators(int c);

template <class K>
RingPresentation<K> build_ring(const CatalogEntry& e, const K& field) {
  return RingPresentation<K>::parse(PolyRing<K>(field, e.vars), e.generators);
}

// ---------------------------------------------------------------- generic forms

/// Coefficients are uniform in GF(p), or integers in [-100, 100] over QQ.
template <class K>
RingPresentation<K> generic_quadrics(int n, int g, std::uint64_t seed, const K& field) {
  if (n < 1 || g < 1 || g > n * (n + 1) / 2) throw std::invalid_argument("generic_quadrics needs 1 <= g <= n(n+1)/2");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  PolyRing<K> ring(field, names);
  std::mt19937_64 rng(seed);
  auto monos = monomials_of_degree(n, 2);
  FieldSpec spec = field.spec();
  std::vector<Polynomial<K>> gens;
  for (int k = 0; k < g; ++k) {
    std::vector<Term<K>> ts;
    for (const auto& m : monos) {
      std::int64_t c = spec.kind == FieldSpec::Kind::Prime
                           ? static_cast<std::int64_t>(rng() % spec.characteristic)
                           : static_cast<std::int64_t>(rng() % 201) - 100;
      ts.push_back({m, field.from_int(c)});
    }
    gens.push_back(ring.from_terms(std::move(ts)));
  }
  return RingPresentation<K>(ring, gens);
}

/// dim I_3 = min(g n, binom(n+2, 3)) and dim I_2 = g.
template <class K>
bool hochster_laksov_check(const RingPresentation<K>& R, int n, int g) {
  auto G = buchberger(R, 3);
  auto hf = hilbert_series(G.leads(), n).hilbert_function(3);
  auto binom = [](std::int64_t a, std::int64_t b) {
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::int64_t i2 = binom(n + 1, 2) - hf[2];
  std::int64_t i3 = binom(n + 2, 3) - hf[3];
  return i2 == g && i3 == std::min<std::int64_t>(static_cast<std::int64_t>(g) * n, binom(n + 2, 3));
}

/// The degree-2 part of the initial ideal avoids the 2n-1 smallest quadratic monomials.
template <class K>
bool avoided_monomials_certificate(const RingPresentation<K>& R, const GroebnerBasis<K>& G) {
  int n = R.nvars();
  auto small = smallest_quadratic_monomials(n, 2 * n - 1);
  for (const auto& l : G.leads())
    if (l.degree() == 2)
      for (const auto& m : small)
        if (m == l) return false;
  return true;
}

template <class K>
bool avoided_monomials_certificate(const RingPresentation<K>& R) {
  return avoided_monomials_certificate(R, buchberger(R));
}

template <class K>
struct GenericSample {
  RingPresentation<K> ring;
  std::vector<std::uint64_t> seeds_tried;
  std::uint64_t seed_used = 0;
  bool avoided_monomials = false;
};

/// A generic sample for an admissible (n, g): resamples with seed+1, seed+2, ... until
/// h = (1, n, binom(n+1,2) - g), dim I_3 is maximal and R is superlevel.
template <class K>
GenericSample<K> generic_sample(int n, int g, std::uint64_t seed, const K& field, int max_tries = 8,
                                const Limits& limits = {}) {
  IntPoly want{1, n, n * (n + 1) / 2 - g};
  std::vector<std::uint64_t> tried;
  for (int k = 0; k < max_tries; ++k) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    tried.push_back(s);
    auto R = generic_quadrics(n, g, s, field);
    auto G = buchberger(R, -1, limits);
    auto hd = hilbert_series(G.leads(), n);
    if (hd.dim != 0 || hd.h != want) continue;
    if (!hochster_laksov_check(R, n, g)) continue;
    auto A = analyze(R, limits);
    if (!A.report.superlevel.value_or(false)) continue;
    bool avoided = avoided_monomials_certificate(R, G);
    return {R, tried, s, avoided};
  }
  std::string list;
  for (auto s : tried) list += (list.empty() ? "" : ", ") + std::to_string(s);
  throw std::runtime_error("generic_sample(" + std::to_string(n) + ", " + std::to_string(g) +
                           "): no seed produced the generic properties; tried " + list);
}

// ---------------------------------------------------------------- ranges and gaps

struct RangeRow {
  int n = 0;
  int g_min = 0;
  int g_max = 0;  // empty range when g_max < g_min
  std::vector<int> gs;
  std::vector<int> cs;  // c(n, g) = (n^2 + 3n)/2 - g, in the order of gs
};

struct RangeReport {
  int c_max = 0;
  std::vector<RangeRow> rows;
  std::set<int> covered;
  std::set<int> missing;   // 9 <= c < threshold not covered
  int threshold = 0;       // every c >= threshold is covered
  int no_gap_from_n = 0;   // c(n, g_min(n)) >= c(n+1, g_max(n+1)) - 1 for all n >= this
  std::vector<int> no_gap_fails;  // n >= 4 below no_gap_from_n where the inequality fails
};

int g_min(int n);
int g_max(int n);
int c_value(int n, int g);

/// Integers g with (n^2+3n+2)/6 <= g < (n^2+2n)/4.
RangeRow admissible_range(int n);

/// Which c = c(n, g) occur for admissible (n, g) with n >= 4, up to c_max.
RangeReport gap_analysis(int c_max);

// ---------------------------------------------------------------- verification

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct EntryOptions {
  int koszul_bound = 4;
  int jmax = 8;
  Limits limits;
};

struct IdealizationSummary {
  IntPoly h;
  int nvars = 0;
  int codim = 0;
  int reg = -1;  // -1 when the resolution was not computed
  int socle_dim = 0;
  bool quadratic = false;
  bool gorenstein = false;
  std::optional<BettiTable> betti;
  std::vector<std::string> generators;
  std::vector<std::string> vars;
};

template <class K>
struct EntryReport {
  std::string id;
  InvariantReport report;
  std::optional<IdealizationSummary> idealization;
  std::optional<KoszulVerdict> koszul;
  std::vector<Check> checks;
  double seconds = 0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::string to_string(const IntPoly& h);
std::string rows_to_string(const std::map<int, std::int64_t>& row);

/// Summary of the idealization of an Artinian or CM level ring. The Betti table is
/// only computed when `resolve` is set; otherwise reg comes from the h-vector of an
/// Artinian result and Gorenstein from its socle.
template <class K>
IdealizationSummary summarize_idealization(const IdealizationResult<K>& I, bool resolve, const Limits& limits = {}) {
  const auto& P = I.presentation;
  IdealizationSummary s;
  auto G = buchberger(P, -1, limits);
  auto hd = hilbert_series(G.leads(), P.nvars());
  s.h = hd.h;
  s.nvars = P.nvars();
  s.codim = P.nvars() - hd.dim;
  s.quadratic = true;
  for (const auto& g : minimalize_ideal(P.ring, P.generators)) s.quadratic = s.quadratic && g.degree() == 2;
  for (const auto& g : P.generators) s.generators.push_back(P.ring.to_string(g));
  s.vars = P.ring.names();
  if (hd.dim == 0) {
    auto soc = socle(P, G);
    for (int d : soc) s.socle_dim += d;
    s.gorenstein = s.socle_dim == 1;
    s.reg = static_cast<int>(hd.h.size()) - 1;
  }
  if (resolve) {
    auto b = frame_betti(P.ring, G, limits);
    auto rep = basic_invariants(P, G, b);
    s.reg = rep.reg;
    s.gorenstein = rep.gorenstein;
    s.betti = b;
  }
  return s;
}

namespace detail {

inline void add_check(std::vector<Check>& out, std::string name, const std::string& expected, const std::string& actual) {
  out.push_back({std::move(name), expected, actual, expected == actual});
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// Computes everything the entry's expectations mention and compares.
template <class K>
EntryReport<K> verify_entry(const CatalogEntry& e, const K& field, const EntryOptions& opt = {}) {
  using detail::add_check;
  using detail::yes_no;
  Stopwatch clock;
  EntryReport<K> out;
  out.id = e.id;
  auto R = build_ring(e, field);
  auto A = analyze(R, opt.limits);
  const auto& r = A.report;
  out.report = r;
  const auto& x = e.expected;
  auto& c = out.checks;
  if (x.h) add_check(c, "h-vector", to_string(*x.h), to_string(r.hilbert.h));
  if (x.codim) add_check(c, "codim", std::to_string(*x.codim), std::to_string(r.codim));
  if (x.reg) add_check(c, "reg", std::to_string(*x.reg), std::to_string(r.reg));
  if (x.pd) add_check(c, "pd", std::to_string(*x.pd), std::to_string(r.pd));
  if (x.type) add_check(c, "type", std::to_string(*x.type), std::to_string(r.type));
  if (x.num_generators) add_check(c, "minimal generators", std::to_string(*x.num_generators), std::to_string(r.num_generators));
  if (x.codim_plus_type) add_check(c, "codim + type", std::to_string(*x.codim_plus_type), std::to_string(r.codim + r.type));
  if (x.level) add_check(c, "level", yes_no(*x.level), yes_no(r.level));
  if (x.superlevel) add_check(c, "superlevel", yes_no(*x.superlevel), yes_no(r.superlevel.value_or(false)));
  if (x.gorenstein) add_check(c, "Gorenstein", yes_no(*x.gorenstein), yes_no(r.gorenstein));
  if (x.complete_intersection) add_check(c, "complete intersection", yes_no(*x.complete_intersection), yes_no(r.complete_intersection));
  if (x.almost_complete_intersection)
    add_check(c, "almost complete intersection", yes_no(*x.almost_complete_intersection), yes_no(r.almost_complete_intersection));
  if (x.quadratic) add_check(c, "quadratic", yes_no(*x.quadratic), yes_no(r.quadratic));
  for (const auto& [row, want] : x.betti_rows)
    add_check(c, "Betti row " + std::to_string(row), rows_to_string(want), rows_to_string(r.betti.row(row)));
  if (x.koszul) {
    auto v = koszul_probe(R, opt.koszul_bound, opt.jmax, opt.limits);
    std::string got = v.kind == KoszulKind::NonKoszulWitness || v.froberg_witness ? "non-Koszul"
                      : v.kind == KoszulKind::KoszulThroughN                    ? "Koszul"
                                                                                : "inconclusive";
    add_check(c, "Koszul", *x.koszul ? "Koszul" : "non-Koszul", got);
    out.koszul = std::move(v);
  }
  if (x.idealization_h || !x.idealization_betti_rows.empty()) {
    auto I = idealize(A, e.id);
    auto s = summarize_idealization(I, x.resolve_idealization, opt.limits);
    if (x.idealization_h) add_check(c, "idealization h-vector", to_string(*x.idealization_h), to_string(s.h));
    add_check(c, "idealization quadratic", "true", yes_no(s.quadratic));
    add_check(c, "idealization Gorenstein", "true", yes_no(s.gorenstein));
    add_check(c, "idealization codim = codim + type", std::to_string(r.codim + r.type), std::to_string(s.codim));
    if (s.reg >= 0) add_check(c, "idealization reg = reg + 1", std::to_string(r.reg + 1), std::to_string(s.reg));
    if (s.betti)
      for (const auto& [row, want] : x.idealization_betti_rows)
        add_check(c, "idealization Betti row " + std::to_string(row), rows_to_string(want), rows_to_string(s.betti->row(row)));
    out.idealization = std::move(s);
  }
  out.seconds = clock.seconds();
  return out;
}

}  // namespace nagata

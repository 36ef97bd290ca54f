#include "nagata/io/commands.hpp"

#include <algorithm>
#include <functional>

namespace nagata {

namespace {

json input_json(const IdealFile& f, const std::string& source) {
  return {{"source", source}, {"field", f.field.to_string()}, {"vars", f.vars}, {"generators", f.generators}};
}

json bounds_json(const RunOptions& opt) {
  return {{"koszul_bound", opt.koszul_bound}, {"jmax", opt.jmax}, {"limits", to_json(opt.limits)}};
}

void add_check(json& cert, bool& ok, const std::string& name, const std::string& expected, const std::string& actual) {
  Check c{name, expected, actual, expected == actual};
  ok = ok && c.pass;
  cert["checks"].push_back(to_json(c));
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

IdealFile with_override(IdealFile f, const RunOptions& opt) {
  if (opt.field) f.field = *opt.field;
  return f;
}

/// Runs body on a certificate that may be partially filled when an exception escapes.
CommandResult guarded(json cert, std::string id, const std::function<int(json&, CommandResult&)>& body) {
  CommandResult out;
  out.id = std::move(id);
  Stopwatch clock;
  cert["timings"] = json::object();
  try {
    out.exit_code = body(cert, out);
    cert["status"] = out.exit_code == kExitOk ? "ok" : "mismatch";
  } catch (const ResourceExceeded& e) {
    out.exit_code = kExitResource;
    cert["status"] = "resource-exceeded";
    cert["error"] = e.what();
  } catch (const ParseError& e) {
    out.exit_code = kExitInput;
    cert["status"] = "input-error";
    cert["error"] = e.what();
  } catch (const std::invalid_argument& e) {
    out.exit_code = kExitInput;
    cert["status"] = "input-error";
    cert["error"] = e.what();
  } catch (const std::exception& e) {
    out.exit_code = kExitMismatch;
    cert["status"] = "failed";
    cert["error"] = e.what();
  }
  cert["timings"]["total"] = clock.seconds();
  out.certificate = std::move(cert);
  return out;
}

/// Invariants, Koszul probe and, for level rings, the idealization summary.
template <class K>
Analysis<K> analyze_into(json& cert, const RingPresentation<K>& R, const RunOptions& opt) {
  Stopwatch sw;
  auto A = analyze(R, opt.limits);
  cert["invariants"] = to_json(A.report);
  cert["timings"]["analyze"] = sw.seconds();
  if (opt.koszul_bound > 0) {
    Stopwatch k;
    cert["koszul"] = to_json(koszul_probe(R, opt.koszul_bound, opt.jmax, opt.limits));
    cert["timings"]["koszul"] = k.seconds();
  }
  if (A.report.cohen_macaulay && A.report.level) {
    Stopwatch i;
    auto I = idealize(A);
    auto s = summarize_idealization(I, opt.resolve_idealization, opt.limits);
    cert["idealization"] = to_json(s);
    cert["idealization"]["t"] = I.t;
    cert["timings"]["idealization"] = i.seconds();
  }
  return A;
}

}  // namespace

CommandResult analyze_command(const IdealFile& file, const RunOptions& opt, const std::string& source) {
  json cert = certificate_header("analyze");
  auto f = with_override(file, opt);
  cert["input"] = input_json(f, source);
  cert["bounds"] = bounds_json(opt);
  return guarded(cert, "analyze", [&](json& c, CommandResult&) {
    visit_field(f.field, [&](const auto& K) { analyze_into(c, to_presentation(f, K), opt); });
    return kExitOk;
  });
}

CommandResult idealize_command(const IdealFile& file, const RunOptions& opt, const std::string& source) {
  json cert = certificate_header("idealize");
  auto f = with_override(file, opt);
  cert["input"] = input_json(f, source);
  cert["bounds"] = bounds_json(opt);
  cert["checks"] = json::array();
  return guarded(cert, "idealize", [&](json& c, CommandResult& out) {
    bool ok = true;
    visit_field(f.field, [&](const auto& K) {
      auto R = to_presentation(f, K);
      Stopwatch sw;
      auto A = analyze(R, opt.limits);
      c["base"] = to_json(A.report);
      c["timings"]["analyze"] = sw.seconds();
      auto I = idealize(A, source);
      out.emitted_ideal = format_ideal_file(I.presentation, "idealization of " + (source.empty() ? "input" : source));
      c["presentation"] = to_ideal_file(I.presentation).generators;
      c["new_variables"] = I.new_variables;
      auto s = summarize_idealization(I, opt.resolve_idealization, opt.limits);
      c["idealization"] = to_json(s);
      c["idealization"]["t"] = I.t;
      c["timings"]["idealization"] = sw.seconds();
      const auto& r = A.report;
      add_check(c, ok, "codim = codim R + type R", std::to_string(r.codim + r.type), std::to_string(s.codim));
      if (s.reg >= 0) add_check(c, ok, "reg = reg R + 1", std::to_string(r.reg + 1), std::to_string(s.reg));
      add_check(c, ok, "Gorenstein", "true", yes_no(s.gorenstein));
      if (r.quadratic) add_check(c, ok, "quadratic iff R superlevel", yes_no(r.superlevel.value_or(false)), yes_no(s.quadratic));
      if (opt.koszul_bound > 0) {
        Stopwatch k;
        c["koszul"] = to_json(koszul_probe(I.presentation, opt.koszul_bound, opt.jmax, opt.limits));
        c["timings"]["koszul"] = k.seconds();
      }
    });
    return ok ? kExitOk : kExitMismatch;
  });
}

CommandResult tensor_command(const IdealFile& a, const IdealFile& b, const RunOptions& opt, const std::string& source) {
  json cert = certificate_header("tensor");
  auto fa = with_override(a, opt);
  auto fb = with_override(b, opt);
  cert["input"] = {{"a", input_json(fa, "")}, {"b", input_json(fb, "")}, {"source", source}};
  cert["bounds"] = bounds_json(opt);
  cert["checks"] = json::array();
  return guarded(cert, "tensor", [&](json& c, CommandResult& out) {
    if (!(fa.field == fb.field))
      throw std::invalid_argument("tensor needs a common field, got " + fa.field.to_string() + " and " + fb.field.to_string());
    bool ok = true;
    visit_field(fa.field, [&](const auto& K) {
      auto RA = to_presentation(fa, K);
      auto RB = to_presentation(fb, K);
      auto T = tensor_product(RA, RB);
      out.emitted_ideal = format_ideal_file(T, "tensor product");
      auto tf = to_ideal_file(T);
      c["presentation"] = {{"vars", tf.vars}, {"generators", tf.generators}};
      auto A = analyze_into(c, T, opt);
      auto ha = hilbert_series(buchberger(RA, -1, opt.limits).leads(), RA.nvars());
      auto hb = hilbert_series(buchberger(RB, -1, opt.limits).leads(), RB.nvars());
      add_check(c, ok, "h-polynomial is the product", to_string(intpoly_mul(ha.h, hb.h)), to_string(A.report.hilbert.h));
    });
    return ok ? kExitOk : kExitMismatch;
  });
}

CommandResult catalog_command(const std::string& id, const RunOptions& opt) {
  json cert = certificate_header("catalog run");
  cert["bounds"] = bounds_json(opt);
  return guarded(cert, id, [&](json& c, CommandResult& out) {
    auto e = catalog(id);
    out.id = e.id;
    if (opt.koszul_bound <= 0) e.expected.koszul.reset();
    FieldSpec field = opt.field.value_or(FieldSpec::prime(kDefaultCharacteristic));
    c["input"] = {{"catalog_id", e.id},       {"description", e.description}, {"origin", e.source},
                  {"field_note", e.field_note}, {"field", field.to_string()},     {"vars", e.vars},
                  {"generators", e.generators}};
    EntryOptions eo;
    eo.koszul_bound = opt.koszul_bound;
    eo.jmax = opt.jmax;
    eo.limits = opt.limits;
    bool ok = visit_field(field, [&](const auto& K) {
      auto r = verify_entry(e, K, eo);
      c["invariants"] = to_json(r.report);
      if (r.koszul) c["koszul"] = to_json(*r.koszul);
      if (r.idealization) c["idealization"] = to_json(*r.idealization);
      c["checks"] = json::array();
      for (const auto& ch : r.checks) c["checks"].push_back(to_json(ch));
      c["timings"]["verify"] = r.seconds;
      return r.ok();
    });
    return ok ? kExitOk : kExitMismatch;
  });
}

CommandResult generic_command(int n, int g, std::uint64_t seed, const RunOptions& opt) {
  json cert = certificate_header("generic");
  FieldSpec field = opt.field.value_or(FieldSpec::prime(kDefaultCharacteristic));
  cert["input"] = {{"n", n}, {"g", g}, {"seed", json_int(static_cast<std::int64_t>(seed))}, {"field", field.to_string()}};
  cert["bounds"] = bounds_json(opt);
  cert["checks"] = json::array();
  std::string id = "generic-" + std::to_string(n) + "-" + std::to_string(g) + "-s" + std::to_string(seed);
  return guarded(cert, id, [&](json& c, CommandResult& out) {
    auto row = admissible_range(n);
    if (std::find(row.gs.begin(), row.gs.end(), g) == row.gs.end())
      throw std::invalid_argument("(n, g) = (" + std::to_string(n) + ", " + std::to_string(g) +
                                  ") is outside the admissible range " + std::to_string(row.g_min) + ".." +
                                  std::to_string(row.g_max));
    bool ok = true;
    visit_field(field, [&](const auto& K) {
      Stopwatch sw;
      auto s = generic_sample(n, g, seed, K, 8, opt.limits);
      json tried = json::array();
      for (auto t : s.seeds_tried) tried.push_back(json_int(static_cast<std::int64_t>(t)));
      c["input"]["seeds_tried"] = tried;
      c["input"]["seed_used"] = json_int(static_cast<std::int64_t>(s.seed_used));
      auto f = to_ideal_file(s.ring);
      c["input"]["vars"] = f.vars;
      c["input"]["generators"] = f.generators;
      c["avoided_monomials"] = s.avoided_monomials;
      c["timings"]["sample"] = sw.seconds();
      out.emitted_ideal = format_ideal_file(f, id);
      auto A = analyze_into(c, s.ring, opt);
      const auto& r = A.report;
      int cv = c_value(n, g);
      add_check(c, ok, "h-vector", to_string(IntPoly{1, n, n * (n + 1) / 2 - g}), to_string(r.hilbert.h));
      add_check(c, ok, "maximal growth in degree 3", "true", yes_no(hochster_laksov_check(s.ring, n, g)));
      add_check(c, ok, "superlevel", "true", yes_no(r.superlevel.value_or(false)));
      add_check(c, ok, "codim + type", std::to_string(cv), std::to_string(r.codim + r.type));
      if (c.contains("koszul"))
        add_check(c, ok, "non-Koszul", "non-koszul-witness", c["koszul"]["kind"].get<std::string>());
      if (c.contains("idealization")) {
        add_check(c, ok, "idealization h-vector", to_string(IntPoly{1, cv, cv, 1}),
                  to_string(IntPoly(c["idealization"]["h_vector"].begin(), c["idealization"]["h_vector"].end())));
        add_check(c, ok, "idealization quadratic", "true", yes_no(c["idealization"]["quadratic"]));
        add_check(c, ok, "idealization Gorenstein", "true", yes_no(c["idealization"]["gorenstein"]));
      }
    });
    return ok ? kExitOk : kExitMismatch;
  });
}

CommandResult gaps_command(int c_max) {
  json cert = certificate_header("gaps");
  cert["input"] = {{"c_max", c_max}};
  return guarded(cert, "gaps-" + std::to_string(c_max), [&](json& c, CommandResult&) {
    c["range_report"] = to_json(gap_analysis(c_max));
    return kExitOk;
  });
}

json catalog_listing() {
  json out = json::array();
  for (const auto& id : catalog_ids()) {
    if (id.rfind("generic(", 0) == 0) {
      // listing should not pay for the sampling
      out.push_back({{"id", id}, {"description", "seeded generic quadrics"}, {"origin", "derived"}});
      continue;
    }
    auto e = catalog(id);
    out.push_back({{"id", e.id}, {"description", e.description}, {"origin", e.source}});
  }
  return out;
}

}  // namespace nagata

#include "nagata/io/certificate.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace nagata {

namespace {

constexpr std::int64_t kExactDouble = std::int64_t{1} << 53;

}  // namespace

json json_int(std::int64_t v) {
  if (v > -kExactDouble && v < kExactDouble) return v;
  return std::to_string(v);
}

json json_int(const mpz_class& v) {
  if (v.fits_slong_p()) return json_int(static_cast<std::int64_t>(v.get_si()));
  return v.get_str();
}

json json_poly(const IntPoly& p) {
  json a = json::array();
  for (auto c : p) a.push_back(json_int(c));
  return a;
}

json to_json(const BettiTable& b) {
  json e = json::array();
  for (const auto& [key, v] : b.entries())
    if (v) e.push_back({key.first, key.second, json_int(v)});
  json out{{"entries", e}, {"complete", b.complete()}};
  if (!b.complete()) out["bounds"] = {{"max_i", b.bound_i()}, {"max_j", b.bound_j()}};
  json lines = json::array();
  std::string text = b.to_string(), line;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) lines.push_back(line);
  out["table"] = lines;
  return out;
}

json to_json(const HilbertData& h) {
  return {{"numerator", json_poly(h.numerator)},
          {"h_vector", json_poly(h.h)},
          {"dim", h.dim},
          {"a_invariant", h.a_invariant},
          {"multiplicity", json_int(h.multiplicity())}};
}

json to_json(const InvariantReport& r) {
  json out{{"nvars", r.nvars},
           {"codim", r.codim},
           {"dim", r.dim},
           {"reg", r.reg},
           {"pd", r.pd},
           {"a_invariant", r.a_invariant},
           {"type", r.type},
           {"num_generators", r.num_generators},
           {"generator_degrees", r.generator_degrees},
           {"cohen_macaulay", r.cohen_macaulay},
           {"artinian", r.artinian},
           {"quadratic", r.quadratic},
           {"nondegenerate", r.nondegenerate},
           {"level", r.level},
           {"gorenstein", r.gorenstein},
           {"complete_intersection", r.complete_intersection},
           {"almost_complete_intersection", r.almost_complete_intersection},
           {"hilbert", to_json(r.hilbert)},
           {"betti", to_json(r.betti)}};
  out["superlevel"] = r.superlevel ? json(*r.superlevel) : json(nullptr);
  return out;
}

json to_json(const KoszulVerdict& v) {
  json out{{"kind", to_string(v.kind)}, {"N", v.N}, {"jmax", v.jmax}, {"reason", v.reason}};
  out["witness"] = v.witness ? json{v.witness->first, v.witness->second} : json(nullptr);
  out["froberg_witness"] = v.froberg_witness ? json(*v.froberg_witness) : json(nullptr);
  if (!v.table.entries().empty()) out["residue_field_betti"] = to_json(v.table);
  return out;
}

json to_json(const IdealizationSummary& s) {
  json out{{"nvars", s.nvars},           {"h_vector", json_poly(s.h)}, {"codim", s.codim},
           {"socle_dim", s.socle_dim},   {"quadratic", s.quadratic},  {"gorenstein", s.gorenstein},
           {"vars", s.vars},             {"generators", s.generators}};
  out["reg"] = s.reg >= 0 ? json(s.reg) : json(nullptr);
  if (s.betti) out["betti"] = to_json(*s.betti);
  return out;
}

json to_json(const RangeReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n}, {"g_min", row.g_min}, {"g_max", row.g_max}, {"g", row.gs}, {"c", row.cs}});
  return {{"c_max", r.c_max},
          {"rows", rows},
          {"covered", r.covered},
          {"missing", r.missing},
          {"threshold", r.threshold},
          {"no_gap_from_n", r.no_gap_from_n},
          {"no_gap_fails", r.no_gap_fails}};
}

json to_json(const Check& c) {
  return {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
}

json to_json(const Limits& l) {
  return {{"max_pairs", l.max_pairs}, {"max_entries", l.max_entries}, {"max_seconds", l.max_seconds}};
}

json certificate_header(const std::string& command) {
  return {{"schema", kCertificateSchema}, {"tool_version", kToolVersion}, {"command", command}};
}

std::string certificate_hash(const json& cert) {
  json c = cert;
  if (c.is_object()) c.erase("timings");
  std::string s = c.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string persist_certificate(const std::string& dir, const std::string& id, const json& cert) {
  std::string safe;
  for (char c : id) safe += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-') ? c : '_';
  std::filesystem::create_directories(dir);
  auto path = std::filesystem::path(dir) / (safe + "-" + certificate_hash(cert) + ".cert.json");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << cert.dump(2) << "\n";
  return path.string();
}

}  // namespace nagata

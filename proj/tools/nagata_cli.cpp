#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nagata/io/commands.hpp"

using namespace nagata;

namespace {

struct Global {
  std::string out_dir;
  double max_seconds = 0;
  std::size_t max_pairs = 0;
  std::size_t max_entries = 0;
  bool compact = false;
};

struct Common {
  long long characteristic = -1;  // -1: keep the input's field, 0: QQ
  int koszul_bound = 4;
  int jmax = 8;
  bool resolve = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--char", c.characteristic, "field characteristic, 0 for QQ");
  cmd->add_option("--koszul-bound", c.koszul_bound, "homological bound of the Koszul probe, 0 to skip")->capture_default_str();
  cmd->add_option("--jmax", c.jmax, "internal degree bound of the Koszul probe")->capture_default_str();
  cmd->add_flag("--resolve-idealization", c.resolve, "compute the full Betti table of the idealization");
}

RunOptions options(const Global& g, const Common& c) {
  RunOptions o;
  if (c.characteristic == 0) o.field = FieldSpec::rationals();
  else if (c.characteristic > 0) o.field = FieldSpec::prime(static_cast<std::uint32_t>(c.characteristic));
  o.koszul_bound = c.koszul_bound;
  o.jmax = c.jmax;
  o.resolve_idealization = c.resolve;
  o.limits.max_seconds = g.max_seconds;
  o.limits.max_pairs = g.max_pairs;
  o.limits.max_entries = g.max_entries;
  return o;
}

std::string out_dir(const Global& g) {
  if (!g.out_dir.empty()) return g.out_dir;
  const char* env = std::getenv("NAGATA_OUT_DIR");
  return env ? env : "";
}

void emit(const Global& g, const CommandResult& r) {
  std::cout << (g.compact ? r.certificate.dump() : r.certificate.dump(2)) << "\n";
  auto dir = out_dir(g);
  if (!dir.empty()) std::cerr << "wrote " << persist_certificate(dir, r.id, r.certificate) << "\n";
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || text.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

int input_error(const std::exception& e) {
  std::cerr << "error: " << e.what() << "\n";
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded rings, canonical modules and idealizations"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--out", g.out_dir, "directory for <id>-<hash>.cert.json files (default: $NAGATA_OUT_DIR)");
  app.add_option("--max-seconds", g.max_seconds, "wall time cap per step");
  app.add_option("--max-pairs", g.max_pairs, "cap on the critical pair queue");
  app.add_option("--max-entries", g.max_entries, "cap on matrix entries");
  app.add_flag("--compact", g.compact, "single-line JSON");

  Common common;
  std::string file, file_b, emit_path, id;
  bool all = false;
  int n = 0, gg = 0, cmax = 30;
  std::uint64_t seed = 1;

  auto* analyze = app.add_subcommand("analyze", "invariants, Koszul probe and idealization summary");
  analyze->add_option("file", file, "ideal file")->required();
  add_common(analyze, common);

  auto* idealize = app.add_subcommand("idealize", "idealization by the shifted canonical module");
  idealize->add_option("file", file, "ideal file")->required();
  idealize->add_option("--emit-ideal", emit_path, "write the idealization as an ideal file");
  add_common(idealize, common);

  auto* catalog_cmd = app.add_subcommand("catalog", "catalogued examples");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->fallthrough();
  catalog_cmd->add_subcommand("list", "list catalog ids");
  auto* run = catalog_cmd->add_subcommand("run", "verify catalog entries");
  run->add_option("id", id, "catalog id");
  run->add_flag("--all", all, "every entry, sorted by id");
  add_common(run, common);

  auto* generic = app.add_subcommand("generic", "seeded generic quadrics with admissible (n, g)");
  generic->add_option("--n", n, "number of variables")->required();
  generic->add_option("--g", gg, "number of quadrics")->required();
  generic->add_option("--seed", seed, "random seed")->capture_default_str();
  generic->add_option("--emit-ideal", emit_path, "write the sample as an ideal file");
  add_common(generic, common);

  auto* gaps = app.add_subcommand("gaps", "which c = codim + type the admissible ranges reach");
  gaps->add_option("--cmax", cmax, "largest c considered")->capture_default_str();

  auto* tensor = app.add_subcommand("tensor", "tensor product of two presentations");
  tensor->add_option("file_a", file, "first ideal file")->required();
  tensor->add_option("file_b", file_b, "second ideal file")->required();
  tensor->add_option("--emit-ideal", emit_path, "write the product as an ideal file");
  add_common(tensor, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    auto opt = options(g, common);
    if (analyze->parsed() || idealize->parsed() || tensor->parsed()) {
      IdealFile f, fb;
      try {
        f = parse_ideal_file(file);
        if (tensor->parsed()) fb = parse_ideal_file(file_b);
      } catch (const std::exception& e) {
        return input_error(e);
      }
      CommandResult r = analyze->parsed()    ? analyze_command(f, opt, file)
                        : idealize->parsed() ? idealize_command(f, opt, file)
                                             : tensor_command(f, fb, opt, file + " " + file_b);
      emit(g, r);
      write_text(emit_path, r.emitted_ideal);
      return r.exit_code;
    }
    if (catalog_cmd->parsed()) {
      if (!run->parsed()) {
        std::cout << catalog_listing().dump(2) << "\n";
        return kExitOk;
      }
      if (all == !id.empty()) {
        std::cerr << "error: give either a catalog id or --all\n";
        return kExitInput;
      }
      if (!all) {
        auto r = catalog_command(id, opt);
        emit(g, r);
        return r.exit_code;
      }
      auto ids = catalog_ids();
      std::sort(ids.begin(), ids.end());
      json entries = json::array();
      int code = kExitOk;
      for (const auto& i : ids) {
        auto r = catalog_command(i, opt);
        std::cerr << (r.exit_code == kExitOk ? "ok   " : "FAIL ") << i << "  "
                  << r.certificate["timings"]["total"].get<double>() << " s\n";
        auto dir = out_dir(g);
        if (!dir.empty()) persist_certificate(dir, r.id, r.certificate);
        entries.push_back(std::move(r.certificate));
        code = std::max(code, r.exit_code);
      }
      json all_cert = certificate_header("catalog run --all");
      all_cert["entries"] = entries;
      std::cout << (g.compact ? all_cert.dump() : all_cert.dump(2)) << "\n";
      return code;
    }
    if (generic->parsed()) {
      auto r = generic_command(n, gg, seed, opt);
      emit(g, r);
      write_text(emit_path, r.emitted_ideal);
      return r.exit_code;
    }
    if (gaps->parsed()) {
      auto r = gaps_command(cmax);
      emit(g, r);
      return r.exit_code;
    }
  } catch (const std::invalid_argument& e) {
    return input_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitInput;
}

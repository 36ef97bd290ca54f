#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nagata/io/certificate.hpp"
#include "nagata/io/ideal_file.hpp"

namespace nagata {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInput = 2, kExitResource = 3 };

struct RunOptions {
  std::optional<FieldSpec> field;  // overrides the field of the input
  int koszul_bound = 4;            // 0 skips the Koszul probe
  int jmax = 8;
  bool resolve_idealization = false;
  Limits limits;
};

struct CommandResult {
  json certificate;
  int exit_code = kExitOk;
  std::string id;            // stem for the persisted file name
  std::string emitted_ideal;  // ideal text of the constructed ring, if any
};

CommandResult analyze_command(const IdealFile& file, const RunOptions& opt, const std::string& source);
CommandResult idealize_command(const IdealFile& file, const RunOptions& opt, const std::string& source);
CommandResult tensor_command(const IdealFile& a, const IdealFile& b, const RunOptions& opt, const std::string& source);
CommandResult catalog_command(const std::string& id, const RunOptions& opt);
CommandResult generic_command(int n, int g, std::uint64_t seed, const RunOptions& opt);
CommandResult gaps_command(int c_max);

/// Ids, descriptions and sources of every catalog entry.
json catalog_listing();

}  // namespace nagata

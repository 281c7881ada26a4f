#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "szeta/mp/precision.hpp"

namespace szeta::cli {

enum class OutputFormat { csv, json };

// Options shared by every subcommand.  prec_bits empty means "auto".
struct RunConfig {
  std::optional<long> prec_bits;
  std::string zeros_source;  // path or "find:K"; empty when unused
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path;   // stdout when empty
};

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, numeric_failure = 3 };

/// Precision for the run: explicit bits, else SUPERZETA_PREC_BITS, else the module defaults.
[[nodiscard]] mp::PrecisionContext context_for(const RunConfig& cfg);

/// Full command line (args[0] is the program name).  Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace szeta::cli

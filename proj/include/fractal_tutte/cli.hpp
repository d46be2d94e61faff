#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fractal_tutte {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitCap = 3,
  kExitDomain = 4,
};

/// Runs the CLI on `args` (program name first). Results go to `out` (or the
/// --out file) only after all computation has finished; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fractal_tutte

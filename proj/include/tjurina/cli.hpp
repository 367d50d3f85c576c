#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tjurina {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitAnalysis = 3,
  kExitNotOnCurve = 4,
};

/// Runs the tool on `args` (without the program name) and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tjurina

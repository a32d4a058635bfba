#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgraph::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kPredicateFalse = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
  kInternalError = 4,
};

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgraph::cli

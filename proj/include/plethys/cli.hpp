#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plethys {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitIdentityFailure = 1,
  kExitInputError = 2,
  kExitBudgetExceeded = 3,
};

/// Runs the `plethys` command line (args excludes the program name), writing
/// results to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plethys

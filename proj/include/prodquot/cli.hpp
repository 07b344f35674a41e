#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prodquot {

/// Process exit codes.
enum ExitCode : int {
  exit_ok = 0,
  exit_internal = 1,
  exit_validation = 2,
  exit_coverage = 3,
};

/// Runs the command line `args` (without the program name) and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prodquot

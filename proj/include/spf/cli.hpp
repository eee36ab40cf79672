#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spf {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kExitOk = 0,
  kExitNotGeometricallyReducible = 2,
  kExitNoFactorization = 3,
  kExitUsage = 4,
  kExitInternal = 5,
};

/// Runs one CLI invocation; `args` excludes the program name. The report goes
/// to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spf

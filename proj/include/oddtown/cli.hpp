#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddtown {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

// Runs one command (args exclude the program name). The last line written to `out`
// is always a one-line verdict.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddtown

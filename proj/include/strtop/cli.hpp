#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strtop {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitFileNotFound = 3,
  kExitPrecondition = 4,
  kExitInvalidData = 5,
};

/// Runs one command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strtop

#pragma once

#include <iosfwd>

namespace flood {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidInput = 2,
  kExitNotAtFree = 3,
  kExitOracleLimit = 4,
};

// floodit check|solve|contract|gen|serve. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flood

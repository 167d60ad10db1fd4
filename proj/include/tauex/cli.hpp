#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tauex {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitUnsupported = 3,
};

/// Runs one CLI invocation. Data goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tauex

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zinbiel::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kPropertyFailed = 1,  // a mathematical property failed: potential counterexample
  kUsageError = 2,      // bad flags, unreadable or malformed input, out-of-scope request
};

/// Runs one invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zinbiel::cli

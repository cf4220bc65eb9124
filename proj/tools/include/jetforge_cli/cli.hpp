#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jetforge::cli {

/// Exit codes of the jetforge tool.
enum ExitCode : int {
  ok = 0,
  negative_verdict = 1,
  input_error = 2,
  limit_error = 3,
  internal_error = 4,
};

/// Runs the tool on `args` (args[0] is the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetforge::cli

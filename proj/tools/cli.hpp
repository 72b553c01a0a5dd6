#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace npd::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kParse = 2, kFailure = 3 };

/// Runs the command line `npd <args...>`, writing results to out (unless
/// --output is given) and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace npd::cli

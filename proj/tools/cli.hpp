#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jackpoly::cli {

/// Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.
enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jackpoly::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace circaut::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidInput = 2, kResourceCap = 3 };

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circaut::cli

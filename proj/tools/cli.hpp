#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace su2ctl::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kNumericalFailure = 3 };

/// Runs one command line (args exclude the program name). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace su2ctl::cli

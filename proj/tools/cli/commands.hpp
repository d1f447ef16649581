#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace borelkit::cli {

enum ExitCode : int { kOk = 0, kMismatch = 2, kInputError = 3, kResourceLimit = 4 };

// Runs one command line (without the program name), writing JSON lines to out
// and diagnostics to err. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace borelkit::cli

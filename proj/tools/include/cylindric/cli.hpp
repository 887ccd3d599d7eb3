#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cylindric::cli {

enum ExitCode : int { kSuccess = 0, kMismatch = 1, kInputError = 2 };

// Runs one cylpp invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cylindric::cli

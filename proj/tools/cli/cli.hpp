#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxlab::cli {

enum ExitCode : int { kOk = 0, kFalseVerdict = 1, kInputError = 2 };

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxlab::cli

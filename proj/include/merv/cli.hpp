#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace merv::cli {

enum ExitCode : int { kOk = 0, kImpossible = 1, kUsage = 2, kInput = 3, kBudget = 4 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace merv::cli

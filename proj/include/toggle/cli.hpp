#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toggle::cli {

enum ExitCode : int { Success = 0, Failure = 1, BadInput = 2, OverBudget = 3 };

// Runs one command line (program name excluded). Reports go to `out`,
// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toggle::cli

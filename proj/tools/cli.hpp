#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace groverad::cli {

enum ExitCode : int { kSuccess = 0, kNumericalFailure = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name. Diagnostics go to
/// `err` as a single line; --help output goes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groverad::cli

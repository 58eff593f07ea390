#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace totalrank::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kNumericalError = 2 };

/// Runs the `rank` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Score formatting used in TSV output: 12 significant digits, '.' decimal point
/// regardless of locale.
std::string format_score(double value);

}  // namespace totalrank::cli

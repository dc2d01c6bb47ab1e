#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghcs {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitPass = 0,
  kExitToleranceFailure = 1,
  kExitInvalidInput = 2,
  kExitNumericalFailure = 3,
};

/// `start..stop:step` (stop kept when within half a step) or a single number.
/// Throws std::invalid_argument on malformed or empty grids.
std::vector<double> parse_grid(const std::string& text);

/// Formats with 17 significant digits and a '.' decimal point.
std::string format_number(double value);

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghcs

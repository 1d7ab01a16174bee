#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twinasset::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 2,
    kIoError = 3,
    kNumericalError = 4,
};

/// Parses a grid argument: either a comma list ("0.5,1,1.5") or an
/// inclusive range "start:stop:step".
std::vector<double> parse_grid(const std::string& text);

/// Parses a horizon: "day", "month", "quarter" or a number of years.
double parse_horizon(const std::string& text);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. CSV / record output goes to `out` unless --out names a
/// file; diagnostics go to `err` as a single `error: <kind>: <message>` line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twinasset::cli

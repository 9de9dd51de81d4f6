#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eil {

/// Exit codes of the `eil` tool.
enum ExitCode : int { exit_ok = 0, exit_counterexample = 1, exit_usage = 2 };

/// Runs the command line `args` (without the program name). Never throws;
/// errors become messages on `err` and exit_usage.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace eil

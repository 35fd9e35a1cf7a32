#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anosov {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Runs the anosov-cert command line (arguments without the program name).
/// JSON reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anosov

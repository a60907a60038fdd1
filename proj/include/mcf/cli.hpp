#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcf {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitStoppedEarly = 2,
};

/// Runs the command-line tool on `args` (without the program name), writing
/// regular output to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcf

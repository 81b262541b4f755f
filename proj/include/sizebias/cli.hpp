#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sizebias::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kIngest = 3,
    kCompute = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Reports go to files or `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sizebias::cli

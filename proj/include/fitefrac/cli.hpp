#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fitefrac::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kSolverFailure = 3,
    kVerificationFailure = 4,
};

/// Runs the command line `args` (args[0] is the program name) writing human
/// output to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace fitefrac::cli

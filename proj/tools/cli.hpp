#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trg::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kUsageError = 2,
    kCounterexamples = 3,
};

/// Runs one command line (args excludes the program name), writing normal
/// output to out and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trg::cli

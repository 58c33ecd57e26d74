#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nthprime::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kVerificationFailed = 2,
    kUsage = 64,
};

/// Runs the command line `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nthprime::cli

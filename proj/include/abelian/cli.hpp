#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abelian::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kInvalidSubstitution = 3,
    kResourceCap = 4,
    kMismatch = 5,
    kInvalidDigits = 6,
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace abelian::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frob::cli {

// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kInvalidInput = 2,
    kInternal = 3,
    kMismatch = 4,
    kIo = 5,
};

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frob::cli

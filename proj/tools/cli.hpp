#pragma once

#include <iosfwd>

namespace slcs::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kLoadError = 3,
    kSemanticError = 4,
};

/// Entry point for the `slcs` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace slcs::cli

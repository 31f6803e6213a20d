#pragma once

#include <ostream>

namespace inversepoint::cli {

/// Exit codes of every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,   // unreadable/invalid input, violated precondition
    kNotConverged = 2, // numerical failure; best iterate still reported
};

/// Entry point of the `inversepoint` tool. Results go to `out`, diagnostics
/// to `err`. Reads INVERSEPOINT_SEED from the environment.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace inversepoint::cli

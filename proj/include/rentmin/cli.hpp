#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rentmin::cli {

/// Exit codes: 0 success, 1 invalid input or arguments, 2 invariant breach.
enum ExitCode : int { kOk = 0, kInvalid = 1, kBreach = 2 };

/**
 * Entry point for the `rentmin` tool. `args` excludes the program name.
 * Subcommands: gen, simulate, opt, check, sweep.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rentmin::cli

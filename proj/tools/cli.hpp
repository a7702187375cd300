#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polymc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // check or validation failed
inline constexpr int kExitUsage = 2;    // bad arguments, unreadable input, parse errors

inline constexpr const char* kWorkersEnv = "POLYMC_WORKERS";

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polymc::cli

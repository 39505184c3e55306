#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treecentral::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`; stdin is read for input "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treecentral::cli

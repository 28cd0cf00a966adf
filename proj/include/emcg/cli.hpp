#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace emcg {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;

/// Runs the command line `args` (without the program name).  Exit codes:
/// 0 pass / equal, 1 fail / not equal, 2 overflow, 64 usage, 65 parse.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace emcg

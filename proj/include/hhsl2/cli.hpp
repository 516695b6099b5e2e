#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hhsl2 {

/// Exit codes of the command line driver.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitFlagged = 2;
inline constexpr int kExitUsage = 3;

/// Runs the driver on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hhsl2

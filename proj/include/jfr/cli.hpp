#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jfr::cli {

/// Exit codes: 0 success, 1 a correctness check failed, 2 bad input or error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

/// Entry point of the jfr_bench tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jfr::cli

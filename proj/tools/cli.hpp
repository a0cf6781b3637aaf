#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncalg::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kVerificationFailed = 3;
inline constexpr int kCrossCheckFailed = 4;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncalg::cli

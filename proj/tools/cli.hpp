#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bcx::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // hypotheses violated / evidence against normality
inline constexpr int kConfigError = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcx::cli

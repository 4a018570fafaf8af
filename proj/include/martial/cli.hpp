#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace martial::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (without the program name). Output goes to out,
/// diagnostics to err. Returns 0 on success, 1 when a verification fails
/// and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace martial::cli

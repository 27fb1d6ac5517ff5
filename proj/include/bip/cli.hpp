#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bip {

/// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs `bip` with args (program name excluded), writing results to out and
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bip

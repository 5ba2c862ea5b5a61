#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace oddmult::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageOrDomain = 2,
  kCapacity = 3,
};

inline constexpr std::uint64_t kDefaultOracleLimit = 10'000'000;
inline constexpr const char* kOracleLimitEnv = "ODDMULT_ORACLE_LIMIT";

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddmult::cli

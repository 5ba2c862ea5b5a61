#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddmult/oracle.hpp"

namespace oddmult {

/// Property sweeps over odd n, each checked against the sieve oracle.
enum class Suite { Kernel, Classify, Factorize, Census, PiSquare };

inline constexpr Suite kAllSuites[] = {Suite::Kernel, Suite::Classify, Suite::Factorize,
                                       Suite::Census, Suite::PiSquare};

[[nodiscard]] std::string_view to_string(Suite s) noexcept;
[[nodiscard]] std::optional<Suite> parse_suite(std::string_view name) noexcept;

struct SuiteResult {
  Suite suite;
  std::uint64_t checked = 0;  // values of n swept
  std::uint64_t failed = 0;
  std::vector<std::string> counterexamples;  // first few, ascending n

  [[nodiscard]] bool passed() const noexcept { return failed == 0; }
};

inline constexpr std::size_t kMaxReportedCounterexamples = 10;

/// Oracle limit a sweep up to max_n needs.
[[nodiscard]] std::uint64_t required_oracle_limit(Suite suite, std::uint64_t max_n);

/// Sweeps every odd n in the suite's range up to max_n. Work is split across
/// `threads` workers; the result does not depend on the thread count.
[[nodiscard]] SuiteResult run_suite(Suite suite, std::uint64_t max_n, const PrimeOracle& oracle,
                                    unsigned threads = 1);

}  // namespace oddmult

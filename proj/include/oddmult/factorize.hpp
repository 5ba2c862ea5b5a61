#pragma once

#include <cstdint>
#include <vector>

#include "oddmult/odd_int.hpp"
#include "oddmult/oracle.hpp"

namespace oddmult {

/// f(n - 2, x) - n. Zero exactly when x divides n. Requires n >= 3.
[[nodiscard]] std::uint64_t divisor_residual(OddInt n, OddInt x);

/// x divides n, decided by f(n - 2, x) == n. Requires n >= 3.
[[nodiscard]] bool divisor_test(OddInt n, OddInt x);

enum class ScanRange {
  Full,      // every odd x in [1, n]
  UpToSqrt,  // odd x in [1, ceil(sqrt n)], cofactors by division
};

/// Solutions of f(n - 2, x) = n: the odd divisors of n.
struct DivisorScan {
  OddInt n;
  std::vector<std::uint64_t> solutions;        // ascending, contains 1 and n
  std::vector<std::uint64_t> prime_solutions;  // ascending, never contains 1

  /// Distinct prime divisors of n.
  [[nodiscard]] unsigned omega_weak() const noexcept {
    return static_cast<unsigned>(prime_solutions.size());
  }
};

/// Scans odd x and keeps the solutions of f(n - 2, x) = n. Requires n >= 3.
/// The oracle only labels which solutions are prime.
[[nodiscard]] DivisorScan odd_divisors(OddInt n, const PrimeOracle& oracle,
                                       ScanRange range = ScanRange::Full);

/// n is prime iff f(n - 2, x) = n has exactly the solutions 1 and n.
/// Requires n >= 3.
[[nodiscard]] bool is_prime_by_solution_count(OddInt n);

/// |{p prime : p <= bound, p | k}| by trial division over the oracle's primes.
/// Requires k >= 3 and bound >= 3.
[[nodiscard]] unsigned distinct_prime_factors_up_to(OddInt k, std::uint64_t bound,
                                                    const PrimeOracle& oracle);

}  // namespace oddmult

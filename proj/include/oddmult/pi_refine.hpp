#pragma once

#include <cstdint>

#include "oddmult/odd_int.hpp"
#include "oddmult/oracle.hpp"
#include "oddmult/rational.hpp"

namespace oddmult {

/// ((n^2 - x) mod 2x + x) / 2x, always in (0, 3/2). Requires odd 3 <= x <= n.
/// x is expected to be prime; only its range is checked.
[[nodiscard]] ExactRational b_term(OddInt n, OddInt x);

/// Count of odd primes <= n^2 from counting the odd integers in (1, n^2]:
///
///     count = dup + sum B - 1/2 - (n^2 / 2)(sum 1/p - 1)
///
/// over odd primes p <= n. The prime 2 is not included.
struct PiSquareReport {
  OddInt n;
  std::uint64_t dup = 0;
  ExactRational b_sum;
  ExactRational sum_recip;
  std::uint64_t odd_prime_count = 0;

  /// pi(n^2) in the usual sense, 2 included.
  [[nodiscard]] std::uint64_t standard_count() const noexcept { return odd_prime_count + 1; }
};

/// Requires n >= 3 and an oracle reaching n. Throws InconsistencyError if the
/// formula does not land on a non-negative integer.
[[nodiscard]] PiSquareReport odd_prime_count_square(OddInt n, const PrimeOracle& oracle);

}  // namespace oddmult

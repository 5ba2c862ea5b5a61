#pragma once

#include <cstdint>
#include <vector>

#include "oddmult/odd_int.hpp"
#include "oddmult/oracle.hpp"

namespace oddmult {

/// Smallest odd multiple of x strictly greater than n:
///
///     f(n, x) = n + 2x - ((n - x) mod 2x)
///
/// with a non-negative remainder, so f(1, 3) = 3. The result is always odd,
/// divisible by x, and lies in [n + 2, n + 2x]. Throws OverflowError if it
/// does not fit in 64 bits.
[[nodiscard]] OddInt f(OddInt n, OddInt x);

/// (n - x) mod 2x, taken in [0, 2x). The distance from n down to the largest
/// odd multiple of x not above n (or n + x when n < x).
[[nodiscard]] std::uint64_t odd_residue(OddInt n, OddInt x);

/// Largest odd multiple of x not exceeding n. Requires n >= x.
/// Always equal to f(n, x) - 2x.
[[nodiscard]] OddInt largest_odd_multiple_at_most(OddInt n, OddInt x);

/// The odd primes 3 <= p <= ceil(sqrt(n)) for n >= 5.
struct PrimeWindow {
  OddInt n;
  std::vector<std::uint64_t> primes;
};

[[nodiscard]] PrimeWindow prime_window(OddInt n, const PrimeOracle& oracle);

/// c1: the minimum of f(n, p) over the prime window, i.e. the smallest odd
/// composite above n. Requires n >= 5.
[[nodiscard]] OddInt smallest_odd_composite_above(OddInt n, const PrimeOracle& oracle);

}  // namespace oddmult

#pragma once

// Brute-force references used by the tests. Deliberately naive and free of the
// library's sieve and kernel code paths.

#include <cstdint>
#include <vector>

#include "oddmult/rational.hpp"

namespace oddmult::testing {

inline bool brute_is_prime(std::uint64_t k) {
  if (k < 2) return false;
  if (k % 2 == 0) return k == 2;
  for (std::uint64_t d = 3; d * d <= k; d += 2) {
    if (k % d == 0) return false;
  }
  return true;
}

/// Walks upward from n + 1 until an odd multiple of x turns up.
inline std::uint64_t brute_next_odd_multiple(std::uint64_t n, std::uint64_t x) {
  for (std::uint64_t k = n + 1;; ++k) {
    if (k % 2 == 1 && k % x == 0) return k;
  }
}

inline std::vector<std::uint64_t> brute_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

/// Distinct primes p <= bound dividing k, by plain trial division.
inline unsigned brute_distinct_factors_up_to(std::uint64_t k, std::uint64_t bound) {
  unsigned m = 0;
  for (std::uint64_t d = 2; d <= bound && d <= k; ++d) {
    if (k % d == 0 && brute_is_prime(d)) ++m;
  }
  return m;
}

inline std::uint64_t brute_dup_sum(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t k = a + 2; k <= b; k += 2) {
    const unsigned m = brute_distinct_factors_up_to(k, n);
    if (m > 1) total += m - 1;
  }
  return total;
}

inline std::uint64_t brute_prime_count(std::uint64_t a, std::uint64_t b) {
  std::uint64_t count = 0;
  for (std::uint64_t k = a + 1; k <= b; ++k) count += brute_is_prime(k) ? 1 : 0;
  return count;
}

/// Sum of 1/p over odd primes p <= n, one addition at a time.
inline ExactRational brute_sum_recip(std::uint64_t n) {
  ExactRational s;
  for (std::uint64_t p = 3; p <= n; p += 2) {
    if (brute_is_prime(p)) s += ExactRational(1, static_cast<std::int64_t>(p));
  }
  return s;
}

}  // namespace oddmult::testing

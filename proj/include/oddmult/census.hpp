#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "oddmult/odd_int.hpp"
#include "oddmult/oracle.hpp"
#include "oddmult/rational.hpp"

namespace oddmult {

/// Largest n accepted by the interval censuses; keeps (n + 2)^2 well inside 64 bits.
inline constexpr std::uint64_t kMaxCensusN = (std::uint64_t{1} << 31) - 3;

/// Which interval around n^2 is counted.
enum class Interval {
  Full,   // (n^2, (n+2)^2]
  Lower,  // (n^2, n(n+2)]
  Upper,  // (n(n+2), (n+2)^2]
};

[[nodiscard]] std::string_view to_string(Interval which) noexcept;

struct IntervalBounds {
  OddInt a;  // exclusive
  OddInt b;  // inclusive
};

/// Endpoints of the chosen interval. Requires 3 <= n <= kMaxCensusN.
[[nodiscard]] IntervalBounds interval_bounds(OddInt n, Interval which);

/// Number of odd multiples of x in (a, b], computed as (f(b, x) - f(a, x)) / 2x.
[[nodiscard]] std::uint64_t multiples_count(OddInt a, OddInt b, OddInt x);

/// Extra counts of k when every prime p <= n dividing k counts it once:
/// m - 1 for m >= 1 distinct such primes, else 0. Requires k, n >= 3.
[[nodiscard]] unsigned dup_of(OddInt k, OddInt n, const PrimeOracle& oracle);

/// Sum of dup_of(k, n) over odd k in (a, b], k >= 3. Uses a segmented
/// counting sieve over the interval; needs the oracle's primes up to n.
[[nodiscard]] std::uint64_t dup_sum(OddInt a, OddInt b, OddInt n, const PrimeOracle& oracle);

/// Sum over odd primes 3 <= p <= n of ((b - p) mod 2p - (a - p) mod 2p) / 2p.
[[nodiscard]] ExactRational c_sum(OddInt a, OddInt b, OddInt n, const PrimeOracle& oracle);

/// 1 if n + 2 is prime, read off the gap test. Requires n >= 5.
[[nodiscard]] unsigned epsilon(OddInt n, const PrimeOracle& oracle);

/// One census of the odd integers in (a, b] using the odd primes up to n.
struct IntervalCensus {
  Interval which;
  OddInt a;
  OddInt b;
  OddInt n;
  std::map<std::uint64_t, std::uint64_t> per_prime_counts;  // p -> multiples_count(a, b, p)
  std::uint64_t dup = 0;
  ExactRational c_sum;
  std::uint64_t pi_diff = 0;  // primes in (a, b]
  unsigned epsilon = 0;       // always 0 for the lower interval
  std::uint64_t expected_odd = 0;

  [[nodiscard]] std::uint64_t counted_multiples() const;

  /// 2 (dup + c_sum - pi_diff - epsilon) / (b - a) + 1.
  [[nodiscard]] ExactRational sum_recip() const;
};

/// Requires 5 <= n <= kMaxCensusN. The prime difference comes from the oracle,
/// which must reach sqrt(b) (segmented) or b (table).
[[nodiscard]] IntervalCensus census(OddInt n, Interval which, const PrimeOracle& oracle);

[[nodiscard]] ExactRational sum_recip(OddInt n, Interval which, const PrimeOracle& oracle);
[[nodiscard]] ExactRational sum_recip_full(OddInt n, const PrimeOracle& oracle);
[[nodiscard]] ExactRational sum_recip_lower(OddInt n, const PrimeOracle& oracle);
[[nodiscard]] ExactRational sum_recip_upper(OddInt n, const PrimeOracle& oracle);

/// Sum of 1/p over odd primes p <= n, straight from the prime list. Requires n >= 3.
[[nodiscard]] ExactRational direct_sum_recip(OddInt n, const PrimeOracle& oracle);

/// Solves the chosen identity for the prime count of the interval, taking the
/// reciprocal sum from direct_sum_recip. No prime counts are read from the
/// oracle. Throws InconsistencyError if the solution is not a non-negative integer.
[[nodiscard]] std::uint64_t solve_pi_window(OddInt n, Interval which, const PrimeOracle& oracle);

}  // namespace oddmult

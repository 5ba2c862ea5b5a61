#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace oddmult {

struct PrimeFactor {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Sieve-backed ground truth: primality, pi(x), and trial-division factorization.
///
/// Immutable after build(), so a single instance may be shared across threads.
/// Queries past the sieve limit fall back to trial division (is_prime, factorize)
/// or segmented sieving (count_primes_in) as long as the base primes reach the
/// square root of the argument; otherwise they throw CapacityError.
class PrimeOracle {
 public:
  static constexpr std::uint64_t kDefaultMaxLimit = 1'000'000'000;

  /// Sieves every integer in [0, limit]. Requires 10 <= limit <= max_limit.
  static PrimeOracle build(std::uint64_t limit, std::uint64_t max_limit = kDefaultMaxLimit);

  [[nodiscard]] std::uint64_t limit() const noexcept { return limit_; }

  [[nodiscard]] bool is_prime(std::uint64_t k) const;

  /// Number of primes <= x (the prime 2 included). Requires x <= limit().
  [[nodiscard]] std::uint64_t pi(std::uint64_t x) const;

  /// Number of primes p with a < p <= b.
  [[nodiscard]] std::uint64_t count_primes_in(std::uint64_t a, std::uint64_t b) const;

  /// Every prime <= limit(), ascending.
  [[nodiscard]] std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  /// Odd primes 3 <= p <= bound, ascending. Requires bound <= limit().
  [[nodiscard]] std::span<const std::uint32_t> odd_primes_up_to(std::uint64_t bound) const;

  /// Full factorization of 2 <= k <= limit()^2, ascending by prime.
  [[nodiscard]] std::vector<PrimeFactor> factorize(std::uint64_t k) const;

  /// All positive divisors of k >= 1, ascending.
  [[nodiscard]] std::vector<std::uint64_t> divisors(std::uint64_t k) const;

  /// Number of distinct prime factors of k >= 1.
  [[nodiscard]] unsigned omega(std::uint64_t k) const;

 private:
  PrimeOracle() = default;

  [[nodiscard]] bool table_bit(std::uint64_t k) const noexcept {
    return (bits_[k >> 6] >> (k & 63)) & 1U;
  }
  void require_root_coverage(std::uint64_t k, const char* what) const;

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> bits_;   // bit k set iff k is prime
  std::vector<std::uint32_t> rank_;   // primes strictly below word i
  std::vector<std::uint32_t> primes_;
};

}  // namespace oddmult

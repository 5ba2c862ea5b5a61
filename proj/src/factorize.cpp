#include "oddmult/factorize.hpp"

#include <algorithm>
#include <string>

#include "oddmult/errors.hpp"
#include "oddmult/int_math.hpp"
#include "oddmult/kernel.hpp"

namespace oddmult {

namespace {

void require_at_least_three(OddInt n) {
  if (n.value() < 3) {
    throw DomainError("expected an odd integer >= 3, got " + std::to_string(n.value()));
  }
}

}  // namespace

std::uint64_t divisor_residual(OddInt n, OddInt x) {
  require_at_least_three(n);
  return f(OddInt(n.value() - 2), x).value() - n.value();
}

bool divisor_test(OddInt n, OddInt x) { return divisor_residual(n, x) == 0; }

DivisorScan odd_divisors(OddInt n, const PrimeOracle& oracle, ScanRange range) {
  require_at_least_three(n);
  DivisorScan scan{n, {}, {}};
  if (range == ScanRange::Full) {
    for (std::uint64_t x = 1; x <= n.value(); x += 2) {
      if (divisor_test(n, OddInt(x))) scan.solutions.push_back(x);
    }
  } else {
    const std::uint64_t top = ceil_sqrt(n.value());
    for (std::uint64_t x = 1; x <= top; x += 2) {
      if (!divisor_test(n, OddInt(x))) continue;
      scan.solutions.push_back(x);
      scan.solutions.push_back(n.value() / x);
    }
    std::sort(scan.solutions.begin(), scan.solutions.end());
    scan.solutions.erase(std::unique(scan.solutions.begin(), scan.solutions.end()),
                         scan.solutions.end());
  }
  for (const std::uint64_t x : scan.solutions) {
    if (x > 1 && oracle.is_prime(x)) scan.prime_solutions.push_back(x);
  }
  return scan;
}

bool is_prime_by_solution_count(OddInt n) {
  require_at_least_three(n);
  // Any solution strictly between 1 and n already rules out "exactly two".
  for (std::uint64_t x = 3; x < n.value(); x += 2) {
    if (divisor_test(n, OddInt(x))) return false;
  }
  return divisor_test(n, OddInt(1)) && divisor_test(n, n);
}

unsigned distinct_prime_factors_up_to(OddInt k, std::uint64_t bound, const PrimeOracle& oracle) {
  require_at_least_three(k);
  if (bound < 3) throw DomainError("prime bound must be at least 3, got " + std::to_string(bound));

  std::uint64_t rest = k.value();
  const std::uint64_t trial_bound = std::min(bound, oracle.limit());
  unsigned m = 0;
  bool rest_is_prime_or_one = false;
  for (const std::uint64_t p : oracle.odd_primes_up_to(trial_bound)) {
    if (p * p > rest) {
      rest_is_prime_or_one = true;
      break;
    }
    if (rest % p != 0) continue;
    ++m;
    do {
      rest /= p;
    } while (rest % p == 0);
  }
  if (rest == 1) return m;
  if (!rest_is_prime_or_one) {
    // rest has no prime factor <= trial_bound.
    if (trial_bound == bound) return m;
    if (isqrt(rest) > oracle.limit()) {
      throw CapacityError("trial division of " + std::to_string(k.value()) +
                          " needs primes past the oracle limit " +
                          std::to_string(oracle.limit()));
    }
  }
  return rest <= bound ? m + 1 : m;
}

}  // namespace oddmult

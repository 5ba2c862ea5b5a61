#include "oddmult/kernel.hpp"

#include <algorithm>
#include <string>

#include "oddmult/errors.hpp"
#include "oddmult/int_math.hpp"

namespace oddmult {

namespace {

void require_window(OddInt n) {
  if (n.value() < 5) {
    throw DomainError("prime window empty: n must be at least 5, got " +
                      std::to_string(n.value()));
  }
}

}  // namespace

std::uint64_t odd_residue(OddInt n, OddInt x) {
  const std::uint64_t two_x = checked_mul(2, x.value());
  // n - x may be negative; shift by 2x (x mod 2x == x) to stay unsigned.
  const std::uint64_t m = n.value() % two_x;
  return m >= x.value() ? m - x.value() : m + x.value();
}

OddInt f(OddInt n, OddInt x) {
  const std::uint64_t r = odd_residue(n, x);
  const std::uint64_t two_x = 2 * x.value();
  if (r > n.value()) {
    // Only when n < x: r = n + x and the answer is x itself.
    return OddInt(two_x - (r - n.value()));
  }
  return OddInt(checked_add(n.value() - r, two_x));
}

OddInt largest_odd_multiple_at_most(OddInt n, OddInt x) {
  if (n < x) {
    throw DomainError("largest odd multiple of " + std::to_string(x.value()) +
                      " at most " + std::to_string(n.value()) + " does not exist");
  }
  return OddInt(n.value() - odd_residue(n, x));
}

PrimeWindow prime_window(OddInt n, const PrimeOracle& oracle) {
  require_window(n);
  const auto window = oracle.odd_primes_up_to(ceil_sqrt(n.value()));
  return PrimeWindow{n, {window.begin(), window.end()}};
}

OddInt smallest_odd_composite_above(OddInt n, const PrimeOracle& oracle) {
  require_window(n);
  const auto window = oracle.odd_primes_up_to(ceil_sqrt(n.value()));
  std::uint64_t best = UINT64_MAX;
  for (const std::uint64_t p : window) {
    best = std::min(best, f(n, OddInt(p)).value());
  }
  return OddInt(best);
}

}  // namespace oddmult

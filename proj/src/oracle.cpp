#include "oddmult/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "oddmult/errors.hpp"
#include "oddmult/int_math.hpp"

namespace oddmult {

namespace {

constexpr std::uint64_t kSegmentSpan = std::uint64_t{1} << 18;

}  // namespace

PrimeOracle PrimeOracle::build(std::uint64_t limit, std::uint64_t max_limit) {
  if (limit < 10) {
    throw DomainError("oracle limit must be at least 10, got " + std::to_string(limit));
  }
  max_limit = std::min<std::uint64_t>(max_limit, UINT32_MAX);
  if (limit > max_limit) {
    throw CapacityError("oracle limit " + std::to_string(limit) + " exceeds the cap " +
                        std::to_string(max_limit));
  }

  PrimeOracle o;
  o.limit_ = limit;
  const std::uint64_t words = limit / 64 + 1;
  o.bits_.assign(words, ~std::uint64_t{0});
  auto clear = [&](std::uint64_t k) { o.bits_[k >> 6] &= ~(std::uint64_t{1} << (k & 63)); };
  clear(0);
  clear(1);
  for (std::uint64_t k = 4; k <= limit; k += 2) clear(k);
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (!o.table_bit(p)) continue;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) clear(m);
  }
  // Bits above limit in the last word are garbage; drop them.
  const unsigned tail = static_cast<unsigned>(limit & 63);
  if (tail != 63) o.bits_.back() &= (std::uint64_t{1} << (tail + 1)) - 1;

  o.rank_.resize(words);
  std::uint32_t running = 0;
  for (std::uint64_t w = 0; w < words; ++w) {
    o.rank_[w] = running;
    running += static_cast<std::uint32_t>(std::popcount(o.bits_[w]));
  }

  o.primes_.reserve(running);
  for (std::uint64_t w = 0; w < words; ++w) {
    for (std::uint64_t word = o.bits_[w]; word != 0; word &= word - 1) {
      o.primes_.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(word)));
    }
  }
  return o;
}

void PrimeOracle::require_root_coverage(std::uint64_t k, const char* what) const {
  if (isqrt(k) > limit_) {
    throw CapacityError(std::string(what) + ": " + std::to_string(k) +
                        " needs base primes up to " + std::to_string(isqrt(k)) +
                        " but the oracle stops at " + std::to_string(limit_));
  }
}

bool PrimeOracle::is_prime(std::uint64_t k) const {
  if (k <= limit_) return table_bit(k);
  require_root_coverage(k, "is_prime");
  for (std::uint32_t p : primes_) {
    if (std::uint64_t{p} * p > k) break;
    if (k % p == 0) return false;
  }
  return true;
}

std::uint64_t PrimeOracle::pi(std::uint64_t x) const {
  if (x > limit_) {
    throw CapacityError("pi(" + std::to_string(x) + ") is past the oracle limit " +
                        std::to_string(limit_));
  }
  const std::uint64_t word = x >> 6;
  const unsigned bit = static_cast<unsigned>(x & 63);
  const std::uint64_t mask = bit == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (bit + 1)) - 1;
  return rank_[word] + static_cast<std::uint64_t>(std::popcount(bits_[word] & mask));
}

std::uint64_t PrimeOracle::count_primes_in(std::uint64_t a, std::uint64_t b) const {
  if (b <= a) return 0;
  if (b <= limit_) return pi(b) - pi(a);
  require_root_coverage(b, "count_primes_in");

  std::uint64_t count = 0;
  std::uint64_t lo = a + 1;
  if (lo <= limit_) {
    count += pi(limit_) - pi(a);
    lo = limit_ + 1;
  }
  // Segmented sieve over [lo, b]; every value here exceeds limit_ >= 10, so 2 is never hit.
  std::vector<char> composite;
  const std::uint64_t root = isqrt(b);
  for (std::uint64_t seg = lo; seg <= b;) {
    const std::uint64_t hi = std::min(b, seg + kSegmentSpan - 1);
    composite.assign(hi - seg + 1, 0);
    for (std::uint32_t p : primes_) {
      if (p > root) break;
      std::uint64_t first = (seg + p - 1) / p * p;
      first = std::max(first, std::uint64_t{p} * p);
      for (std::uint64_t m = first; m <= hi; m += p) composite[m - seg] = 1;
    }
    for (std::uint64_t k = seg; k <= hi; ++k) {
      if (!composite[k - seg] && k >= 2) ++count;
    }
    if (hi == b) break;
    seg = hi + 1;
  }
  return count;
}

std::span<const std::uint32_t> PrimeOracle::odd_primes_up_to(std::uint64_t bound) const {
  if (bound > limit_) {
    throw CapacityError("odd primes up to " + std::to_string(bound) +
                        " requested but the oracle stops at " + std::to_string(limit_));
  }
  const auto end = std::upper_bound(primes_.begin(), primes_.end(), bound);
  const auto begin = std::upper_bound(primes_.begin(), end, std::uint64_t{2});
  return {begin, end};
}

std::vector<PrimeFactor> PrimeOracle::factorize(std::uint64_t k) const {
  if (k < 2) throw DomainError("factorize needs k >= 2, got " + std::to_string(k));
  require_root_coverage(k, "factorize");
  std::vector<PrimeFactor> out;
  for (std::uint32_t p : primes_) {
    if (std::uint64_t{p} * p > k) break;
    if (k % p != 0) continue;
    unsigned e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (k > 1) out.push_back({k, 1});
  return out;
}

std::vector<std::uint64_t> PrimeOracle::divisors(std::uint64_t k) const {
  if (k == 0) throw DomainError("divisors of 0 are undefined");
  std::vector<std::uint64_t> out{1};
  if (k == 1) return out;
  for (const auto& [p, e] : factorize(k)) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned PrimeOracle::omega(std::uint64_t k) const {
  if (k < 2) return 0;
  return static_cast<unsigned>(factorize(k).size());
}

}  // namespace oddmult

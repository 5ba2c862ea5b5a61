#include "oddmult/census.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "oddmult/classify.hpp"
#include "oddmult/errors.hpp"
#include "oddmult/factorize.hpp"
#include "oddmult/int_math.hpp"
#include "oddmult/kernel.hpp"

namespace oddmult {

namespace {

// Odd values per dup sieve segment.
constexpr std::uint64_t kDupSegmentOdds = std::uint64_t{1} << 20;

void require_ordered(OddInt a, OddInt b) {
  if (a >= b) {
    throw DomainError("interval (" + std::to_string(a.value()) + ", " +
                      std::to_string(b.value()) + "] is empty");
  }
}

void require_census_n(OddInt n) {
  if (n.value() < 5) {
    throw DomainError("census needs n >= 5, got " + std::to_string(n.value()));
  }
  if (n.value() > kMaxCensusN) {
    throw DomainError("census n " + std::to_string(n.value()) + " exceeds " +
                      std::to_string(kMaxCensusN));
  }
}

}  // namespace

std::string_view to_string(Interval which) noexcept {
  switch (which) {
    case Interval::Full:
      return "full";
    case Interval::Lower:
      return "lower";
    case Interval::Upper:
      return "upper";
  }
  return "unknown";
}

IntervalBounds interval_bounds(OddInt n, Interval which) {
  if (n.value() < 3 || n.value() > kMaxCensusN) {
    throw DomainError("interval bounds need 3 <= n <= " + std::to_string(kMaxCensusN));
  }
  const std::uint64_t v = n.value();
  const OddInt square(v * v);
  const OddInt middle(v * (v + 2));
  const OddInt next_square((v + 2) * (v + 2));
  switch (which) {
    case Interval::Full:
      return {square, next_square};
    case Interval::Lower:
      return {square, middle};
    case Interval::Upper:
      return {middle, next_square};
  }
  throw DomainError("unknown interval");
}

std::uint64_t multiples_count(OddInt a, OddInt b, OddInt x) {
  require_ordered(a, b);
  const std::uint64_t span = f(b, x).value() - f(a, x).value();
  return span / (2 * x.value());
}

unsigned dup_of(OddInt k, OddInt n, const PrimeOracle& oracle) {
  if (n.value() < 3) throw DomainError("dup bound n must be at least 3");
  const unsigned m = distinct_prime_factors_up_to(k, n.value(), oracle);
  return m == 0 ? 0 : m - 1;
}

std::uint64_t dup_sum(OddInt a, OddInt b, OddInt n, const PrimeOracle& oracle) {
  require_ordered(a, b);
  const auto primes = oracle.odd_primes_up_to(n.value());

  // counts[i] = number of primes <= n dividing lo + 2(i + 1), lo exclusive.
  std::vector<std::uint8_t> counts;
  std::uint64_t total = 0;
  for (std::uint64_t lo = a.value(); lo < b.value();) {
    const std::uint64_t odds = std::min(kDupSegmentOdds, (b.value() - lo) / 2);
    const std::uint64_t hi = lo + 2 * odds;
    counts.assign(odds, 0);
    for (const std::uint64_t p : primes) {
      const std::uint64_t step = 2 * p;
      for (std::uint64_t m = f(OddInt(lo), OddInt(p)).value(); m <= hi; m += step) {
        ++counts[(m - lo) / 2 - 1];
      }
    }
    for (const std::uint8_t c : counts) {
      if (c > 1) total += c - 1;
    }
    lo = hi;
  }
  return total;
}

ExactRational c_sum(OddInt a, OddInt b, OddInt n, const PrimeOracle& oracle) {
  require_ordered(a, b);
  std::vector<ExactRational::Term> terms;
  for (const std::uint64_t p : oracle.odd_primes_up_to(n.value())) {
    const OddInt x(p);
    const auto diff = static_cast<std::int64_t>(odd_residue(b, x)) -
                      static_cast<std::int64_t>(odd_residue(a, x));
    terms.push_back({diff, 2 * p});
  }
  return ExactRational::sum(terms);
}

unsigned epsilon(OddInt n, const PrimeOracle& oracle) {
  return classify_successor(n, oracle).subject_is_prime() ? 1 : 0;
}

std::uint64_t IntervalCensus::counted_multiples() const {
  std::uint64_t total = 0;
  for (const auto& [p, count] : per_prime_counts) total += count;
  return total;
}

ExactRational IntervalCensus::sum_recip() const {
  const ExactRational numerator = ExactRational(static_cast<std::int64_t>(dup)) + c_sum -
                                  ExactRational(static_cast<std::int64_t>(pi_diff)) -
                                  ExactRational(static_cast<std::int64_t>(epsilon));
  const auto width = static_cast<std::int64_t>(b.value() - a.value());
  return ExactRational(2) * numerator / ExactRational(width) + ExactRational(1);
}

IntervalCensus census(OddInt n, Interval which, const PrimeOracle& oracle) {
  require_census_n(n);
  const auto [a, b] = interval_bounds(n, which);
  IntervalCensus out{which, a, b, n, {}, 0, {}, 0, 0, (b.value() - a.value()) / 2};
  for (const std::uint64_t p : oracle.odd_primes_up_to(n.value())) {
    out.per_prime_counts.emplace(p, multiples_count(a, b, OddInt(p)));
  }
  out.dup = dup_sum(a, b, n, oracle);
  out.c_sum = c_sum(a, b, n, oracle);
  out.pi_diff = oracle.count_primes_in(a.value(), b.value());
  out.epsilon = which == Interval::Lower ? 0 : epsilon(n, oracle);
  return out;
}

ExactRational sum_recip(OddInt n, Interval which, const PrimeOracle& oracle) {
  return census(n, which, oracle).sum_recip();
}

ExactRational sum_recip_full(OddInt n, const PrimeOracle& oracle) {
  return sum_recip(n, Interval::Full, oracle);
}

ExactRational sum_recip_lower(OddInt n, const PrimeOracle& oracle) {
  return sum_recip(n, Interval::Lower, oracle);
}

ExactRational sum_recip_upper(OddInt n, const PrimeOracle& oracle) {
  return sum_recip(n, Interval::Upper, oracle);
}

ExactRational direct_sum_recip(OddInt n, const PrimeOracle& oracle) {
  if (n.value() < 3) throw DomainError("direct reciprocal sum needs n >= 3");
  std::vector<ExactRational::Term> terms;
  for (const std::uint64_t p : oracle.odd_primes_up_to(n.value())) terms.push_back({1, p});
  return ExactRational::sum(terms);
}

std::uint64_t solve_pi_window(OddInt n, Interval which, const PrimeOracle& oracle) {
  require_census_n(n);
  const auto [a, b] = interval_bounds(n, which);
  const unsigned eps = which == Interval::Lower ? 0 : epsilon(n, oracle);
  const auto half_width = static_cast<std::int64_t>((b.value() - a.value()) / 2);

  // pi_diff = dup + C - eps - (S - 1)(b - a)/2
  const ExactRational solution = ExactRational(static_cast<std::int64_t>(dup_sum(a, b, n, oracle))) +
                                 c_sum(a, b, n, oracle) -
                                 ExactRational(static_cast<std::int64_t>(eps)) -
                                 (direct_sum_recip(n, oracle) - ExactRational(1)) *
                                     ExactRational(half_width);
  const auto value = solution.as_int64();
  if (!value || *value < 0) {
    throw InconsistencyError("prime count for n = " + std::to_string(n.value()) + " (" +
                             std::string(to_string(which)) + ") solved to " +
                             solution.to_string());
  }
  return static_cast<std::uint64_t>(*value);
}

}  // namespace oddmult

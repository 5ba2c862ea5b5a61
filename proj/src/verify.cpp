#include "oddmult/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "oddmult/census.hpp"
#include "oddmult/classify.hpp"
#include "oddmult/factorize.hpp"
#include "oddmult/kernel.hpp"
#include "oddmult/pi_refine.hpp"

namespace oddmult {

namespace {

using Check = std::function<std::optional<std::string>(std::uint64_t)>;

std::string describe(std::uint64_t n, const std::string& what) {
  return "n=" + std::to_string(n) + ": " + what;
}

std::optional<std::string> check_kernel(std::uint64_t n, const PrimeOracle& oracle) {
  const OddInt on(n);
  for (std::uint64_t x = 3; x <= 99; x += 2) {
    const OddInt ox(x);
    const std::uint64_t v = f(on, ox).value();
    if (v % x != 0 || v % 2 == 0 || v <= n) {
      return describe(n, "f(n," + std::to_string(x) + ")=" + std::to_string(v) +
                             " is not an odd multiple above n");
    }
    for (std::uint64_t k = n + 2; k < v; k += 2) {
      if (k % x == 0) {
        return describe(n, "odd multiple " + std::to_string(k) + " of " + std::to_string(x) +
                               " lies below f=" + std::to_string(v));
      }
    }
    if (n >= x && largest_odd_multiple_at_most(on, ox).value() + 2 * x != v) {
      return describe(n, "largest odd multiple + 2x != f for x=" + std::to_string(x));
    }
  }
  if (n >= 5) {
    std::uint64_t brute = n + 2;
    while (oracle.is_prime(brute)) brute += 2;
    const std::uint64_t c1 = smallest_odd_composite_above(on, oracle).value();
    if (c1 != brute || c1 - n > 6) {
      return describe(n, "c1=" + std::to_string(c1) + ", expected " + std::to_string(brute));
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_classify(std::uint64_t n, const PrimeOracle& oracle) {
  const GapClass g = classify_successor(OddInt(n), oracle);
  const bool prime = oracle.is_prime(n + 2);
  const bool twin = prime && oracle.is_prime(n + 4);
  if (g.gap > 6 || g.subject_is_prime() != prime || (g.verdict == Verdict::TwinLower) != twin) {
    return describe(n, "gap " + std::to_string(g.gap) + " verdict " +
                           std::string(to_string(g.verdict)) + " disagrees with the sieve");
  }
  return std::nullopt;
}

std::optional<std::string> check_factorize(std::uint64_t n, const PrimeOracle& oracle) {
  const OddInt on(n);
  const auto expected = oracle.divisors(n);
  const DivisorScan full = odd_divisors(on, oracle);
  if (full.solutions != expected) return describe(n, "full scan solution set differs");
  if (odd_divisors(on, oracle, ScanRange::UpToSqrt).solutions != expected) {
    return describe(n, "sqrt-bounded scan solution set differs");
  }
  if (is_prime_by_solution_count(on) != oracle.is_prime(n)) {
    return describe(n, "two-solution primality disagrees with the sieve");
  }
  if (full.omega_weak() != oracle.omega(n) ||
      distinct_prime_factors_up_to(on, n, oracle) != oracle.omega(n)) {
    return describe(n, "distinct prime factor count differs");
  }
  return std::nullopt;
}

// Odd composites in (a, b] whose prime factors all exceed n.
std::uint64_t composites_above_bound(std::uint64_t a, std::uint64_t b, std::uint64_t n,
                                     const PrimeOracle& oracle) {
  std::uint64_t count = 0;
  for (std::uint64_t k = a + 2; k <= b; k += 2) {
    if (oracle.is_prime(k)) continue;
    if (oracle.factorize(k).front().prime > n) ++count;
  }
  return count;
}

std::optional<std::string> check_census(std::uint64_t n, const PrimeOracle& oracle) {
  const OddInt on(n);
  const ExactRational direct = direct_sum_recip(on, oracle);
  IntervalCensus parts[3] = {census(on, Interval::Full, oracle), census(on, Interval::Lower, oracle),
                             census(on, Interval::Upper, oracle)};
  for (const IntervalCensus& c : parts) {
    const std::string name(to_string(c.which));
    if (c.sum_recip() != direct) {
      return describe(n, name + " identity gives " + c.sum_recip().to_string() + " not " +
                             direct.to_string());
    }
    const std::uint64_t stray = composites_above_bound(c.a.value(), c.b.value(), n, oracle);
    if (stray != c.epsilon) {
      return describe(n, name + " epsilon " + std::to_string(c.epsilon) + " but " +
                             std::to_string(stray) + " composites escape the prime sums");
    }
    if (c.counted_multiples() - c.dup + c.pi_diff + stray != c.expected_odd) {
      return describe(n, name + " census does not add up to the odd count");
    }
    if (solve_pi_window(on, c.which, oracle) != c.pi_diff) {
      return describe(n, name + " solved prime count disagrees with the sieve");
    }
  }
  const auto& [full, lower, upper] = parts;
  if (lower.dup + upper.dup != full.dup || lower.c_sum + upper.c_sum != full.c_sum ||
      lower.pi_diff + upper.pi_diff != full.pi_diff) {
    return describe(n, "lower + upper halves do not add up to the full interval");
  }
  return std::nullopt;
}

std::optional<std::string> check_pisquare(std::uint64_t n, const PrimeOracle& oracle) {
  const PiSquareReport r = odd_prime_count_square(OddInt(n), oracle);
  const std::uint64_t expected = oracle.pi(n * n) - 1;
  if (r.odd_prime_count != expected) {
    return describe(n, "odd prime count " + std::to_string(r.odd_prime_count) + ", sieve says " +
                           std::to_string(expected));
  }
  return std::nullopt;
}

std::uint64_t first_n(Suite s) {
  switch (s) {
    case Suite::Kernel:
      return 1;
    case Suite::Classify:
    case Suite::Census:
      return 5;
    case Suite::Factorize:
    case Suite::PiSquare:
      return 3;
  }
  return 1;
}

}  // namespace

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::Kernel:
      return "kernel";
    case Suite::Classify:
      return "classify";
    case Suite::Factorize:
      return "factorize";
    case Suite::Census:
      return "census";
    case Suite::PiSquare:
      return "pisquare";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  for (const Suite s : kAllSuites) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::uint64_t required_oracle_limit(Suite suite, std::uint64_t max_n) {
  std::uint64_t need = 0;
  switch (suite) {
    case Suite::Kernel:
    case Suite::Classify:
      need = max_n + 8;
      break;
    case Suite::Factorize:
      need = max_n;
      break;
    case Suite::Census:
      need = (max_n + 2) * (max_n + 2);
      break;
    case Suite::PiSquare:
      need = max_n * max_n;
      break;
  }
  return std::max<std::uint64_t>(need, 100);
}

SuiteResult run_suite(Suite suite, std::uint64_t max_n, const PrimeOracle& oracle,
                      unsigned threads) {
  Check check;
  switch (suite) {
    case Suite::Kernel:
      check = [&](std::uint64_t n) { return check_kernel(n, oracle); };
      break;
    case Suite::Classify:
      check = [&](std::uint64_t n) { return check_classify(n, oracle); };
      break;
    case Suite::Factorize:
      check = [&](std::uint64_t n) { return check_factorize(n, oracle); };
      break;
    case Suite::Census:
      check = [&](std::uint64_t n) { return check_census(n, oracle); };
      break;
    case Suite::PiSquare:
      check = [&](std::uint64_t n) { return check_pisquare(n, oracle); };
      break;
  }

  SuiteResult result{suite, 0, 0, {}};
  const std::uint64_t lo = first_n(suite);
  if (max_n < lo) return result;
  const std::uint64_t count = (max_n - lo) / 2 + 1;
  std::vector<std::optional<std::string>> outcomes(count);

  // Blocks are handed out dynamically; each slot is written by exactly one worker.
  constexpr std::uint64_t kBlock = 16;
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t start = next.fetch_add(kBlock); start < count;
         start = next.fetch_add(kBlock)) {
      for (std::uint64_t i = start; i < std::min(count, start + kBlock); ++i) {
        const std::uint64_t n = lo + 2 * i;
        try {
          outcomes[i] = check(n);
        } catch (const std::exception& e) {
          outcomes[i] = describe(n, std::string("threw: ") + e.what());
        }
      }
    }
  };
  threads = std::max(1U, threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  result.checked = count;
  for (auto& outcome : outcomes) {
    if (!outcome) continue;
    ++result.failed;
    if (result.counterexamples.size() < kMaxReportedCounterexamples) {
      result.counterexamples.push_back(std::move(*outcome));
    }
  }
  return result;
}

}  // namespace oddmult

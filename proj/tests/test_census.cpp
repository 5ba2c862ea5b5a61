#include <doctest.h>

#include <random>

#include "oddmult/census.hpp"
#include "oddmult/errors.hpp"
#include "test_support.hpp"

using namespace oddmult;
using oddmult::testing::brute_dup_sum;
using oddmult::testing::brute_prime_count;
using oddmult::testing::brute_sum_recip;

namespace {

const PrimeOracle& oracle() {
  static const PrimeOracle o = PrimeOracle::build(2'000'000);
  return o;
}

const ExactRational kSum11(886, 1155);
const ExactRational kSum37 = ExactRational::parse("4054408822031/3710369067405");

}  // namespace

TEST_CASE("interval endpoints") {
  const auto full = interval_bounds(OddInt(11), Interval::Full);
  CHECK(full.a.value() == 121);
  CHECK(full.b.value() == 169);
  CHECK(interval_bounds(OddInt(11), Interval::Lower).b.value() == 143);
  CHECK(interval_bounds(OddInt(11), Interval::Upper).a.value() == 143);
  CHECK_THROWS_AS((void)interval_bounds(OddInt(kMaxCensusN + 2), Interval::Full), DomainError);
}

TEST_CASE("multiples count") {
  CHECK(multiples_count(OddInt(121), OddInt(169), OddInt(3)) == 8);
  CHECK(multiples_count(OddInt(9), OddInt(15), OddInt(3)) == 1);
  CHECK(multiples_count(OddInt(121), OddInt(169), OddInt(11)) == 2);
  CHECK_THROWS_AS((void)multiples_count(OddInt(15), OddInt(15), OddInt(3)), DomainError);
  CHECK_THROWS_AS((void)multiples_count(OddInt(17), OddInt(15), OddInt(3)), DomainError);
}

TEST_CASE("multiples count matches enumeration on random triples") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::uint64_t> base(0, 50'000);
  std::uniform_int_distribution<std::uint64_t> width(1, 2'000);
  std::uniform_int_distribution<std::uint64_t> factor(0, 300);
  for (int i = 0; i < 10'000; ++i) {
    const std::uint64_t a = 2 * base(rng) + 1;
    const std::uint64_t b = a + 2 * width(rng);
    const std::uint64_t x = 2 * factor(rng) + 1;
    std::uint64_t expected = 0;
    for (std::uint64_t k = a + 2; k <= b; k += 2) expected += k % x == 0 ? 1 : 0;
    REQUIRE_MESSAGE(multiples_count(OddInt(a), OddInt(b), OddInt(x)) == expected,
                    "(" << a << ", " << b << ", " << x << ")");
  }
}

TEST_CASE("dup of single integers") {
  CHECK(dup_of(OddInt(165), OddInt(11), oracle()) == 2);
  CHECK(dup_of(OddInt(169), OddInt(11), oracle()) == 0);
  CHECK(dup_of(OddInt(1495), OddInt(37), oracle()) == 2);
  CHECK(dup_of(OddInt(135), OddInt(11), oracle()) == 1);
  CHECK(dup_of(OddInt(123), OddInt(11), oracle()) == 0);
  CHECK(dup_of(OddInt(1521), OddInt(37), oracle()) == 1);
}

TEST_CASE("dup sums at the worked examples") {
  CHECK(dup_sum(OddInt(121), OddInt(169), OddInt(11), oracle()) == 4);
  CHECK(dup_sum(OddInt(1369), OddInt(1521), OddInt(37), oracle()) == 29);
  CHECK(dup_sum(OddInt(1), OddInt(49), OddInt(7), oracle()) == 4);
}

TEST_CASE("sieved dup sum matches trial division") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint64_t> start(0, 400'000);
  std::uniform_int_distribution<std::uint64_t> width(1, 3'000);
  std::uniform_int_distribution<std::uint64_t> bound(1, 250);
  for (int i = 0; i < 60; ++i) {
    const std::uint64_t a = 2 * start(rng) + 1;
    const std::uint64_t b = a + 2 * width(rng);
    const std::uint64_t n = 2 * bound(rng) + 1;
    REQUIRE(dup_sum(OddInt(a), OddInt(b), OddInt(n), oracle()) == brute_dup_sum(a, b, n));
  }
  // Long enough to span several sieve segments.
  CHECK(dup_sum(OddInt(1), OddInt(5'000'001), OddInt(13), oracle()) ==
        brute_dup_sum(1, 5'000'001, 13));
}

TEST_CASE("C sums") {
  CHECK(c_sum(OddInt(121), OddInt(169), OddInt(11), oracle()) == ExactRational(158, 385));
  const ExactRational c37 = c_sum(OddInt(1369), OddInt(1521), OddInt(37), oracle());
  CHECK(c37 == ExactRational::parse("-186101641456/195282582495"));
  CHECK(c37.to_decimal(6) == "-0.952986");
  CHECK(c_sum(OddInt(9), OddInt(25), OddInt(3), oracle()) == ExactRational(2, 3));
}

TEST_CASE("epsilon follows primality of n + 2") {
  CHECK(epsilon(OddInt(11), oracle()) == 1);
  CHECK(epsilon(OddInt(37), oracle()) == 0);
  CHECK(epsilon(OddInt(5), oracle()) == 1);
  CHECK_THROWS_AS((void)epsilon(OddInt(3), oracle()), DomainError);
}

TEST_CASE("n = 11 census record") {
  const IntervalCensus c = census(OddInt(11), Interval::Full, oracle());
  CHECK(c.per_prime_counts == std::map<std::uint64_t, std::uint64_t>{{3, 8}, {5, 5}, {7, 3}, {11, 2}});
  CHECK(c.dup == 4);
  CHECK(c.c_sum == ExactRational(158, 385));
  CHECK(c.pi_diff == 9);
  CHECK(c.epsilon == 1);
  CHECK(c.expected_odd == 24);
  CHECK(c.counted_multiples() - c.dup + c.pi_diff + c.epsilon == c.expected_odd);
  CHECK(c.sum_recip() == kSum11);
}

TEST_CASE("reciprocal sums from each identity") {
  CHECK(sum_recip_full(OddInt(11), oracle()) == kSum11);
  CHECK(sum_recip_full(OddInt(37), oracle()) == kSum37);
  CHECK(sum_recip_full(OddInt(5), oracle()) == ExactRational(8, 15));
  CHECK(sum_recip_lower(OddInt(5), oracle()) == ExactRational(8, 15));
  CHECK(sum_recip_lower(OddInt(11), oracle()) == kSum11);
  CHECK(sum_recip_lower(OddInt(37), oracle()) == kSum37);
  CHECK(sum_recip_upper(OddInt(5), oracle()) == ExactRational(8, 15));
  CHECK(sum_recip_upper(OddInt(11), oracle()) == kSum11);
  CHECK(sum_recip_upper(OddInt(37), oracle()) == kSum37);
  CHECK(direct_sum_recip(OddInt(11), oracle()) == kSum11);
  CHECK(direct_sum_recip(OddInt(3), oracle()) == ExactRational(1, 3));
  CHECK(direct_sum_recip(OddInt(37), oracle()) == kSum37);
  CHECK_THROWS_AS((void)sum_recip_full(OddInt(3), oracle()), DomainError);
}

TEST_CASE("prime counts solved from the identities") {
  CHECK(solve_pi_window(OddInt(11), Interval::Full, oracle()) == 9);
  CHECK(solve_pi_window(OddInt(37), Interval::Full, oracle()) == 21);
  CHECK(solve_pi_window(OddInt(11), Interval::Lower, oracle()) == brute_prime_count(121, 143));
  CHECK(solve_pi_window(OddInt(11), Interval::Lower, oracle()) == 4);
  CHECK(solve_pi_window(OddInt(11), Interval::Upper, oracle()) == 5);
  for (std::uint64_t n = 5; n <= 301; n += 2) {
    for (const Interval which : {Interval::Full, Interval::Lower, Interval::Upper}) {
      const auto [a, b] = interval_bounds(OddInt(n), which);
      REQUIRE(solve_pi_window(OddInt(n), which, oracle()) == brute_prime_count(a.value(), b.value()));
    }
  }
}

TEST_CASE("identities agree exactly with the direct sum") {
  for (std::uint64_t n = 5; n <= 201; n += 2) {
    const ExactRational direct = brute_sum_recip(n);
    REQUIRE(direct_sum_recip(OddInt(n), oracle()) == direct);
    REQUIRE(sum_recip_full(OddInt(n), oracle()) == direct);
    REQUIRE(sum_recip_lower(OddInt(n), oracle()) == direct);
    REQUIRE(sum_recip_upper(OddInt(n), oracle()) == direct);
  }
}

TEST_CASE("lower and upper halves add up to the full interval") {
  for (std::uint64_t n = 5; n <= 299; n += 2) {
    const IntervalCensus full = census(OddInt(n), Interval::Full, oracle());
    const IntervalCensus lower = census(OddInt(n), Interval::Lower, oracle());
    const IntervalCensus upper = census(OddInt(n), Interval::Upper, oracle());
    REQUIRE(lower.dup + upper.dup == full.dup);
    REQUIRE(lower.c_sum + upper.c_sum == full.c_sum);
    REQUIRE(lower.pi_diff + upper.pi_diff == full.pi_diff);
    REQUIRE(lower.expected_odd + upper.expected_odd == full.expected_odd);
    for (const auto& [p, count] : full.per_prime_counts) {
      REQUIRE(lower.per_prime_counts.at(p) + upper.per_prime_counts.at(p) == count);
    }
  }
}

TEST_CASE("segmented prime counts give the same census") {
  const PrimeOracle small = PrimeOracle::build(1100);
  for (std::uint64_t n : {1001ULL, 1051ULL, 1097ULL}) {
    const IntervalCensus a = census(OddInt(n), Interval::Full, small);
    const IntervalCensus b = census(OddInt(n), Interval::Full, oracle());
    CHECK(a.pi_diff == b.pi_diff);
    CHECK(a.sum_recip() == direct_sum_recip(OddInt(n), small));
  }
}

TEST_CASE("oracle too small for the census") {
  const PrimeOracle tiny = PrimeOracle::build(10);
  CHECK_THROWS_AS((void)census(OddInt(11), Interval::Full, tiny), CapacityError);
  const PrimeOracle short_table = PrimeOracle::build(38);
  CHECK_THROWS_AS((void)census(OddInt(37), Interval::Full, short_table), CapacityError);
}

TEST_CASE("interval names") {
  CHECK(to_string(Interval::Full) == "full");
  CHECK(to_string(Interval::Lower) == "lower");
  CHECK(to_string(Interval::Upper) == "upper");
}

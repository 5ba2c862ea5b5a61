#include "oddmult/pi_refine.hpp"

#include <string>
#include <vector>

#include "oddmult/census.hpp"
#include "oddmult/errors.hpp"
#include "oddmult/kernel.hpp"

namespace oddmult {

namespace {

std::uint64_t odd_square(OddInt n) {
  if (n.value() > kMaxCensusN) {
    throw DomainError("n " + std::to_string(n.value()) + " exceeds " + std::to_string(kMaxCensusN));
  }
  return n.value() * n.value();
}

}  // namespace

ExactRational b_term(OddInt n, OddInt x) {
  if (x.value() < 3 || x > n) {
    throw DomainError("B term needs 3 <= x <= n, got x = " + std::to_string(x.value()) +
                      ", n = " + std::to_string(n.value()));
  }
  const OddInt square(odd_square(n));
  const auto num = static_cast<std::int64_t>(odd_residue(square, x) + x.value());
  return ExactRational(num, static_cast<std::int64_t>(2 * x.value()));
}

PiSquareReport odd_prime_count_square(OddInt n, const PrimeOracle& oracle) {
  if (n.value() < 3) throw DomainError("pi(n^2) refinement needs n >= 3");
  const std::uint64_t square = odd_square(n);

  PiSquareReport report{n, 0, {}, {}, 0};
  report.dup = dup_sum(OddInt(1), OddInt(square), n, oracle);

  std::vector<ExactRational::Term> terms;
  for (const std::uint64_t p : oracle.odd_primes_up_to(n.value())) {
    const OddInt x(p);
    terms.push_back({static_cast<std::int64_t>(odd_residue(OddInt(square), x) + p), 2 * p});
  }
  report.b_sum = ExactRational::sum(terms);
  report.sum_recip = direct_sum_recip(n, oracle);

  const ExactRational count =
      ExactRational(static_cast<std::int64_t>(report.dup)) + report.b_sum - ExactRational(1, 2) -
      ExactRational(static_cast<std::int64_t>(square), 2) * (report.sum_recip - ExactRational(1));
  const auto value = count.as_int64();
  if (!value || *value < 0) {
    throw InconsistencyError("odd prime count below " + std::to_string(square) +
                             " came out as " + count.to_string());
  }
  report.odd_prime_count = static_cast<std::uint64_t>(*value);
  return report;
}

}  // namespace oddmult

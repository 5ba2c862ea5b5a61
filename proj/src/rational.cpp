#include "oddmult/rational.hpp"

#include <string>

#include "oddmult/errors.hpp"

namespace oddmult {

ExactRational::ExactRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

namespace {

struct Partial {
  mpz_class num;
  mpz_class den;
};

Partial sum_range(std::span<const ExactRational::Term> terms) {
  if (terms.size() == 1) {
    return {mpz_class(static_cast<long>(terms[0].num)),
            mpz_class(static_cast<unsigned long>(terms[0].den))};
  }
  const std::size_t mid = terms.size() / 2;
  Partial left = sum_range(terms.first(mid));
  Partial right = sum_range(terms.subspan(mid));
  return {left.num * right.den + right.num * left.den, left.den * right.den};
}

}  // namespace

ExactRational ExactRational::sum(std::span<const Term> terms) {
  if (terms.empty()) return {};
  for (const Term& t : terms) {
    if (t.den == 0) throw DomainError("rational with zero denominator");
  }
  Partial total = sum_range(terms);
  mpq_class q(total.num, total.den);
  q.canonicalize();
  return ExactRational(std::move(q));
}

ExactRational ExactRational::parse(std::string_view text) {
  const std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw DomainError("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw DomainError("rational with zero denominator: '" + s + "'");
  q.canonicalize();
  return ExactRational(std::move(q));
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.q_ == 0) throw DomainError("division of a rational by zero");
  q_ /= o.q_;
  return *this;
}

std::optional<std::int64_t> ExactRational::as_int64() const {
  if (!is_integer()) return std::nullopt;
  const mpz_class& n = q_.get_num();
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!n.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(n.get_si());
}

std::string ExactRational::to_string() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

std::string ExactRational::to_decimal(unsigned digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);

  const mpz_class magnitude = abs(q_.get_num()) * scale;
  const mpz_class& den = q_.get_den();
  mpz_class quot;
  mpz_class rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), magnitude.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(mpz_class(rem * 2), den);
  if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t()))) ++quot;

  std::string body = quot.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  if (digits > 0) body.insert(body.size() - digits, ".");
  if (sgn(q_) < 0 && quot != 0) body.insert(0, "-");
  return body;
}

}  // namespace oddmult

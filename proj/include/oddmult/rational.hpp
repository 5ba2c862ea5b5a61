#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace oddmult {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)
  ExactRational(std::int64_t num, std::int64_t den);

  struct Term {
    std::int64_t num;
    std::uint64_t den;  // > 0
  };

  /// Exact sum of many small fractions. Combines pairwise without reducing
  /// and canonicalizes once, which keeps long prime sums fast.
  static ExactRational sum(std::span<const Term> terms);

  /// Accepts "a" or "a/b" in base 10, optionally signed.
  static ExactRational parse(std::string_view text);

  [[nodiscard]] std::string numerator() const { return q_.get_num().get_str(); }
  [[nodiscard]] std::string denominator() const { return q_.get_den().get_str(); }

  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }

  /// The value as int64 when it is an integer in range.
  [[nodiscard]] std::optional<std::int64_t> as_int64() const;

  [[nodiscard]] double to_double() const { return q_.get_d(); }

  /// "num/den", or just "num" for integers.
  [[nodiscard]] std::string to_string() const;

  /// Fixed-point text with `digits` decimals, rounded half to even.
  [[nodiscard]] std::string to_decimal(unsigned digits = 5) const;

  ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend ExactRational operator-(ExactRational a) { a.q_ = -a.q_; return a; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
    return os << r.to_string();
  }

 private:
  explicit ExactRational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

}  // namespace oddmult

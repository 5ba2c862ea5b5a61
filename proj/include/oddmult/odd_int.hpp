#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "oddmult/errors.hpp"

namespace oddmult {

/// A positive odd integer. Construction from anything else throws DomainError.
class OddInt {
 public:
  explicit OddInt(std::uint64_t value) : value_(value) {
    if (value % 2 == 0) {
      throw DomainError("expected a positive odd integer, got " + std::to_string(value));
    }
  }

  [[nodiscard]] std::uint64_t value() const noexcept { return value_; }

  friend auto operator<=>(const OddInt&, const OddInt&) = default;

  friend std::ostream& operator<<(std::ostream& os, OddInt v) { return os << v.value_; }

 private:
  std::uint64_t value_;
};

}  // namespace oddmult

#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "oddmult/errors.hpp"

namespace oddmult {

/// floor(sqrt(v)), exact for the whole 64-bit range.
inline std::uint64_t isqrt(std::uint64_t v) noexcept {
  if (v < 2) return v;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && (r > UINT32_MAX || r * r > v)) --r;
  while (r + 1 <= UINT32_MAX && (r + 1) * (r + 1) <= v) ++r;
  return r;
}

/// ceil(sqrt(v)).
inline std::uint64_t ceil_sqrt(std::uint64_t v) noexcept {
  const std::uint64_t r = isqrt(v);
  return r * r == v ? r : r + 1;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError(std::to_string(a) + " + " + std::to_string(b) + " overflows 64 bits");
  }
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError(std::to_string(a) + " * " + std::to_string(b) + " overflows 64 bits");
  }
  return out;
}

}  // namespace oddmult

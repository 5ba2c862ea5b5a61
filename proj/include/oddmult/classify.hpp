#pragma once

#include <cstdint>
#include <string_view>

#include "oddmult/odd_int.hpp"
#include "oddmult/oracle.hpp"

namespace oddmult {

enum class Verdict { Composite, Prime, TwinLower };

[[nodiscard]] std::string_view to_string(Verdict v) noexcept;

/// Gap test result for subject = n + 2, read off c1 - n.
struct GapClass {
  OddInt subject;
  unsigned gap;  // 2, 4 or 6
  Verdict verdict;
  OddInt c1;

  /// TwinLower counts as prime.
  [[nodiscard]] bool subject_is_prime() const noexcept { return verdict != Verdict::Composite; }
};

/// Classifies n + 2 from the gap between n and the smallest odd composite above
/// it: 2 means composite, 4 prime, 6 the lower member of a twin-prime pair.
/// Requires n >= 5.
[[nodiscard]] GapClass classify_successor(OddInt n, const PrimeOracle& oracle);

}  // namespace oddmult

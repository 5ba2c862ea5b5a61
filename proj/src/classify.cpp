#include "oddmult/classify.hpp"

#include <string>

#include "oddmult/errors.hpp"
#include "oddmult/kernel.hpp"

namespace oddmult {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Composite:
      return "composite";
    case Verdict::Prime:
      return "prime";
    case Verdict::TwinLower:
      return "twin_lower";
  }
  return "unknown";
}

GapClass classify_successor(OddInt n, const PrimeOracle& oracle) {
  const OddInt c1 = smallest_odd_composite_above(n, oracle);
  const auto gap = static_cast<unsigned>(c1.value() - n.value());
  Verdict verdict{};
  switch (gap) {
    case 2:
      verdict = Verdict::Composite;
      break;
    case 4:
      verdict = Verdict::Prime;
      break;
    case 6:
      verdict = Verdict::TwinLower;
      break;
    default:
      // One of any three consecutive odd numbers is a multiple of 3.
      throw InconsistencyError("gap " + std::to_string(gap) + " above n = " +
                               std::to_string(n.value()) + " is impossible");
  }
  return GapClass{OddInt(n.value() + 2), gap, verdict, c1};
}

}  // namespace oddmult

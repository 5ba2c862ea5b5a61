#pragma once

#include <stdexcept>
#include <string>

namespace oddmult {

/// Input outside the domain of an operation (even argument, n too small, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Fixed-width arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// The prime oracle does not reach far enough, or a requested limit exceeds the cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// An identity that must hold exactly came out wrong. Always a bug.
class InconsistencyError : public std::logic_error {
 public:
  explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace oddmult

#pragma once

#include <stdexcept>
#include <string>

namespace maroni {

// Argument outside the domain of an operation (d < 3, j out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// (j, mu) violates the parity condition j + d - n = 0 (mod 2).
class AdmissibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The joint (Z, N) correction needs a part of mu equal to 1.
class ApplicabilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical invariant failed. Always a bug in this library.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantError(what);
}

}  // namespace maroni

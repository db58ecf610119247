#pragma once

#include <stdexcept>
#include <string>

namespace dq {

// Input outside the mathematical domain of an operation (ω(0), a non-square
// ab+1 handed to regular_third, a divisor interval containing zero, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A request refused by a runtime guard (search limits, sieve sizes).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A certified comparison that failed, or could not be decided at the
// working precision.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dq

#pragma once

#include <stdexcept>
#include <string>

namespace awtk {

/// Raised when a solver call exceeds its deadline.
class SolverTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value that would need an unclassified prime (beyond the configured
/// brute-force limit). `reason()` is a stable machine-readable token.
class Unclassified : public std::runtime_error {
 public:
  Unclassified(long long prime, long long limit);

  long long prime() const noexcept { return prime_; }
  long long limit() const noexcept { return limit_; }
  std::string reason() const;

 private:
  long long prime_;
  long long limit_;
};

/// Input rejected by an operation's precondition (distinct from a property
/// of the input being false).
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Result store refused a write that contradicts an existing record.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace awtk

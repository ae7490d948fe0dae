#pragma once

#include <stdexcept>
#include <string>

namespace divlab {

/// Input outside an operation's mathematical domain (zero polynomial,
/// constant where a degree is required, non-separable F, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Hypotheses of a lemma or property check are not met by the caller's input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No root of F modulo some prime divisor of m.
class NoRootError : public DomainError {
 public:
  NoRootError(const std::string& what, unsigned long long prime)
      : DomainError(what), prime_(prime) {}
  unsigned long long prime() const noexcept { return prime_; }

 private:
  unsigned long long prime_;
};

/// A proven statement failed on valid input. Always an implementation bug.
class LemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Post-condition re-check failed (witness bound, exact divisibility, ...).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Fiber polynomial vanishes or drops degree at the requested point.
class DegenerateFiber : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Text or configuration that cannot be parsed / validated.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace divlab

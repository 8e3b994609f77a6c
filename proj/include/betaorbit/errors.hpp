// Exception types shared by every module.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace betaorbit {

/// A digit or sign decision could not be made even at the precision cap.
class PrecisionExhausted : public std::runtime_error {
 public:
  PrecisionExhausted(const std::string& what, long needed_digits,
                     std::optional<std::size_t> digit_index = std::nullopt)
      : std::runtime_error(what),
        needed_digits_(needed_digits),
        digit_index_(digit_index) {}

  long needed_digits() const noexcept { return needed_digits_; }
  std::optional<std::size_t> digit_index() const noexcept {
    return digit_index_;
  }

 private:
  long needed_digits_;
  std::optional<std::size_t> digit_index_;
};

/// Raised inside an escalation loop when the current working precision is
/// not enough; never escapes a public function.
class InsufficientPrecision : public std::runtime_error {
 public:
  InsufficientPrecision() : std::runtime_error("insufficient precision") {}
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotCentral : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnaryPower : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonBinaryWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoRoot : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MultipleRoots : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact cycle search gave up after the configured number of orbit states.
class CycleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input word starts outside {a, b} although no meagre case applies.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace betaorbit

#pragma once

#include <stdexcept>
#include <string>

namespace rieszlab {

/// Argument outside the mathematical domain of an operation (exponent out of
/// range, evaluation at a singular point, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive refinement stopped before reaching its target accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved_tolerance() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Malformed serialized input. `field` names the offending key path and
/// `line` is 1-based (0 when unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string field, int line)
      : std::runtime_error(what), field_(std::move(field)), line_(line) {}
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

/// A supplied sample does not satisfy the hypotheses of the theorem it is
/// checked against.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rieszlab

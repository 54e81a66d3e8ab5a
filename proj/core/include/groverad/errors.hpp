#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace groverad {

/// Base for failures of a numerical routine (as opposed to invalid input).
/// Carries the name of the failing operation.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(std::string operation, const std::string& message)
      : std::runtime_error(operation + ": " + message), operation_(std::move(operation)) {}

  const std::string& operation() const { return operation_; }

 private:
  std::string operation_;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Raised by evolve() when the step count cannot resolve the field.
class InsufficientStepsError : public NumericalError {
 public:
  InsufficientStepsError(const std::string& message, long long requested, long long required)
      : NumericalError("evolve", message), requested_(requested), required_(required) {}

  long long requested() const { return requested_; }
  long long required() const { return required_; }

 private:
  long long requested_;
  long long required_;
};

}  // namespace groverad

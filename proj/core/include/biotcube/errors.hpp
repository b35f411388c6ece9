#pragma once

#include <stdexcept>
#include <string>

namespace biotcube {

/// A model parameter lies outside its admissible range (e.g. M <= 2/3).
class ParameterDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An argument violates the precondition of an operation
/// (non positive-definite stretch tensor, det F <= 0, empty box, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A user-supplied function returned a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double at)
      : std::runtime_error(what), at_(at) {}

  double at() const noexcept { return at_; }

 private:
  double at_;
};

}  // namespace biotcube

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace rieszwell {

// Base of every error raised by the library. Each subclass maps to one
// failure family so the CLI can choose an exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Gamma-type function evaluated at (or within 1e-6 of) a non-positive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Complex argument on the negative real axis, where the principal branch is cut.
class BranchCutError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iterative method failed to reach its tolerance. Carries the best value
// reached and the error estimate that came with it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_value, double achieved_error)
      : Error(what + diagnostics(best_value, achieved_error)),
        best_value_(best_value),
        achieved_error_(achieved_error) {}

  double best_value() const noexcept { return best_value_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  static std::string diagnostics(double best, double err) {
    char buf[96];
    std::snprintf(buf, sizeof buf, " (best=%.17g, achieved error=%.3e)", best, err);
    return buf;
  }

  double best_value_;
  double achieved_error_;
};

}  // namespace rieszwell

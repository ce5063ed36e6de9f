#pragma once

#include <stdexcept>
#include <string>

#include "qnet/types.hpp"

namespace qnet {

// Root of every exception thrown by the library. The CLI maps the three
// subclasses onto its exit codes (1 validation, 2 numerical, 3 I/O).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Raised when a matrix declared Hermitian is not. Carries the location and
/// size of the worst violation.
class SymmetryError : public ValidationError {
 public:
  SymmetryError(double max_violation, double allowed, Index row, Index col);

  double max_violation() const noexcept { return max_violation_; }
  double allowed() const noexcept { return allowed_; }
  Index row() const noexcept { return row_; }
  Index col() const noexcept { return col_; }

 private:
  double max_violation_;
  double allowed_;
  Index row_;
  Index col_;
};

/// Raised by the master-equation integrator when trace drift or negative
/// populations indicate the step size is too large.
class IntegrationError : public NumericalError {
 public:
  IntegrationError(const std::string& what, double time);
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace qnet

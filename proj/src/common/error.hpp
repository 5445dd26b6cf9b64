#pragma once

#include <stdexcept>
#include <string>

namespace semilinear {

// Base of every error the library raises. The C API maps the concrete type to
// a status code, so new error kinds should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A non-finite interval endpoint or an illegal interval operation
// (division by an interval containing zero, root of a negative number).
class NumericError : public Error {
 public:
  using Error::Error;
};

// A verification condition could not be established. This is not a disproof.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

// The non-rigorous Newton solver did not produce a usable approximation.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double last_residual)
      : Error(what), last_residual_(last_residual) {}
  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace semilinear

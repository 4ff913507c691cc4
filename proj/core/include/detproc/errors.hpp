#pragma once

#include <stdexcept>
#include <string>

namespace detproc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma-function pole (nonpositive integer argument).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Result not representable in double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An iterative or quadrature routine missed its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Invalid model parameters (z integer, xi outside (0,1), ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Size limit exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Window mismatch: wrong domain kind, point outside window, or margin too small.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// Singular linear system; carries the reciprocal condition estimate.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double rcond) : Error(what), rcond_(rcond) {}

  double rcond() const noexcept { return rcond_; }

 private:
  double rcond_;
};

}  // namespace detproc

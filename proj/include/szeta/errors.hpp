#pragma once

#include <stdexcept>
#include <string>

namespace szeta {

/// Root of every library exception.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (bad argument, outside a convergence region, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested exactly at a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Cauchy circle reaches a singularity of the differentiated function.
class RadiusError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A tail correction was requested for a set with no certification height.
class TailUnavailableError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed input data; `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A zero set that cannot be closed under rho -> 1-rho, rho -> conj(rho).
class SymmetryError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Numeric failure: truncation, quadrature or escalation could not reach the target.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Evaluation too close to a zero of the function whose log is taken.
class NearZeroError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

/// Zero scan disagrees with the counting estimate.
class MissedZeroError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

}  // namespace szeta

#pragma once

#include <stdexcept>
#include <string>

namespace eisenfun {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Order of a cyclic group / multisection below 2, or a component index out of range.
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A series did not meet its stopping rule within the term cap.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double last_term)
      : Error(what), last_term_(last_term) {}

  double last_term() const noexcept { return last_term_; }

 private:
  double last_term_;
};

// Division by a vanishing PHF component (tangents, secant).
class PoleError : public Error {
 public:
  using Error::Error;
};

// The EFT integrand has not decayed at the integration window edges.
class ExistenceError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_delta)
      : Error(what), last_delta_(last_delta) {}

  double last_delta() const noexcept { return last_delta_; }

 private:
  double last_delta_;
};

// Truncated Fock space too small (or too large) for the requested construction.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Parameter outside the supported numeric range (degree caps, |alpha| bounds).
class RangeError : public Error {
 public:
  using Error::Error;
};

// A result left the finite doubles.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

}  // namespace eisenfun

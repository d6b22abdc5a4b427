#pragma once

#include <stdexcept>
#include <string>

namespace dlab {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An evaluation point lies outside the function's domain, or a required
/// one-sided limit does not exist there.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied argument violates an operation's precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// An integrand produced a non-finite sample, or a ratio was requested at a
/// non-removable singularity.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace dlab

#pragma once

#include <stdexcept>
#include <string>

namespace tauex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed algebra id, module, lattice point or argument range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The τ-perpendicular category of the input is not one of the closed forms
/// this library knows (the algebra is outside the four counting families).
class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class NotTauRigid : public Error {
 public:
  using Error::Error;
};

class ZeroConstantTerm : public Error {
 public:
  using Error::Error;
};

/// A quadratic-field evaluation that should have been a rational integer was
/// not. Always an implementation bug.
class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

}  // namespace tauex

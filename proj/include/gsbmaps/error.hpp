#pragma once

#include <stdexcept>
#include <string>

namespace gsb {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: instance files, variety expressions, CLI arguments.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition or criterion hypothesis does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different Brauer group models.
class ModelMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The group model carries an index rule this build cannot evaluate.
class UnsupportedModel : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Something the mathematics guarantees did not happen. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsb

#pragma once

#include <stdexcept>
#include <string>

namespace gds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data that does not describe a valid object (duplicate vertex ids,
/// unparsable files, unknown vertices).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A cochain modulus does not fit into the requested phase precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold for valid inputs failed; usually signals a
/// non-manifold input reaching a manifold-only routine.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gds

#pragma once

#include <stdexcept>
#include <string>

namespace zinbiel {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands have incompatible ambient dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The operation is only meaningful for inputs with a property this one lacks
/// (typically: the input is not Zinbiel, or its series does not reach zero).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Brute-force oracle or enumeration requested outside its supported range.
class UnsupportedOracle : public Error {
 public:
  using Error::Error;
};

/// Request would exceed a pinned resource cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A mathematical property that must hold failed. For Zinbiel inputs this is
/// a potential counterexample and is reported, never swallowed.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace zinbiel

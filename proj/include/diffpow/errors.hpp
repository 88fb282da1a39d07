#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffpow {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to polynomial rings with different variable counts.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// An exponent entry or degree exceeded the per-entry cap.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The input is well-formed but violates a mathematical precondition
/// of the requested operation (CLI exit code 2).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The search box of a brute-force enumeration was too small to
/// certify the result; the message names the offending exponent.
class BoxTooSmallError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Ideal-expression syntax error, with the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace diffpow

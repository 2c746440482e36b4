#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zerosum {

/// Base of every error raised by the library. Callers that only care about
/// "something failed" catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Index or size outside the supported range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Iteration failed to converge or a series did not terminate.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Evaluation point too close to a pole of the quantity requested.
class PoleError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Two computed zeros collided or came out of order.
class OrderingError : public Error {
 public:
  using Error::Error;
};

/// A structural property that must hold by construction did not.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Denominator of a zero sum vanished (two zeros too close together).
class DegenerateSpacing : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Cache file written by an incompatible format version.
class StaleCacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace zerosum

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncinv {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated an operation's contract (bad arguments, bad config).
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : UsageError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A documented precondition of a computation does not hold.
class PreconditionError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Arguments outside the mathematical domain of a formula.
class DomainError : public UsageError {
 public:
  using UsageError::UsageError;
};

// A computation would exceed the configured resource limits.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& message, std::size_t dimension)
      : Error(message + " (dimension " + std::to_string(dimension) + ")"),
        dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
};

// A self-check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncinv

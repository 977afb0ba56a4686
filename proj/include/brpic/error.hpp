#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brpic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group specification or input file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A group or product exceeds the configured size limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An argument violates the precondition of an operation.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagree. Always indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace brpic

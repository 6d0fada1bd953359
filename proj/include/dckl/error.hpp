#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dckl {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the configured size bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace dckl

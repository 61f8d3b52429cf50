#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetnash {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial or ideal expression. `position()` is a 0-based
/// offset into the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Invalid argument to an algebraic operation (bad index, shape, rank...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (jet order, minor size, pair queue) was hit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace jetnash

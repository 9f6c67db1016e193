#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenusMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when a composed image exceeds the configured length cap.
class ImageTooLong : public Error {
 public:
  using Error::Error;
};

/// Text input that does not match the grammar. `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error(message + " at column " + std::to_string(column)), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace cdt

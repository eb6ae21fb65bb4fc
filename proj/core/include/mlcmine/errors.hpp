#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlcm {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: item codes, constraint expressions, data files.
/// `position` is a 0-based byte offset into the offending text when known.
class ParseError : public Error {
 public:
  static constexpr std::size_t kNoPosition = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& message, std::size_t position = kNoPosition)
      : Error(position == kNoPosition
                  ? message
                  : message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Structurally well-formed input that violates a semantic rule, e.g. an
/// unknown item code, a non-terminal item in a transaction, a duplicate TID.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace mlcm

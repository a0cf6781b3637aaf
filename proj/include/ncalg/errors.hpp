#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input that parses but violates a structural requirement
/// (non-positive weight, non-graded order, non-LM-reduced relations, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Presentation file whose JSON shape does not match the schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A candidate basis failed the overlap test.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class CrossCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncalg

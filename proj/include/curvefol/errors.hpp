#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvefol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is a 0-based character offset
/// into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a zero-dimensional ideal is required but a variable escapes
/// the staircase.
class DimensionError : public Error {
 public:
  DimensionError(const std::string& what, std::string variable)
      : Error(what), variable_(std::move(variable)) {}
  const std::string& variable() const noexcept { return variable_; }

 private:
  std::string variable_;
};

/// Input violates a documented precondition (arity, degree guard, case...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Chow-ring class integrated in the wrong degree.
class DegreeError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvefol

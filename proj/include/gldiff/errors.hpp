#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gldiff {

/// Operands of incompatible rank or size, or an index outside [1, N].
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation applied outside the domain where it is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed expression text. `position()` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at position " + std::to_string(position) + ": " +
                           message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gldiff

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetforge {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: syntax errors, unknown identifiers,
/// arity and domain mismatches, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Arithmetic between values of incompatible coefficient domains
/// (for instance residues modulo 3 and modulo 5).
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// A configured resource limit would be exceeded: enumeration budget,
/// ambient dimension cap, iteration budget, or integer range.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace jetforge

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fitshift {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built on different GroupRingSpecs were combined.
class SpecMismatch : public Error {
 public:
  using Error::Error;
};

/// An index, exponent or parameter lies outside its admissible range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A request the engine deliberately refuses (unsupported shift regime,
/// uncertified denominator without an explicit assumption, ...).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Surface-syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fitshift

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unbendable {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a 0-based byte offset into the parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A malformed line in an input file.
class FileFormatError : public Error {
 public:
  FileFormatError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An operation's mathematical precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two objects living over different variable rings were combined.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A value was evaluated at a point where a denominator vanishes.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace unbendable

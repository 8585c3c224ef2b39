#pragma once

#include <stdexcept>
#include <string>

namespace coverforge {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different rings (different variables, moduli, primes).
class RingMismatch : public Error {
 public:
  explicit RingMismatch(const std::string& what)
      : Error("ring mismatch: " + what) {}
};

/// The requested query is not supported for this ring or input.
/// Raised instead of returning an answer that could be wrong.
class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& what)
      : Error("unsupported: " + what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0 && column == 0) return "parse error: " + what;
    return "parse error at " + std::to_string(line) + ":" +
           std::to_string(column) + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

/// Input violates a precondition (bad group order, wrong rank, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An extension or fiber fails to be free over its base monoid.
class NotFree : public Error {
 public:
  explicit NotFree(const std::string& what) : Error("not free: " + what) {}
};

/// A bounded search ended without an answer.
class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(const std::string& what) : Error("bound exceeded: " + what) {}
};

}  // namespace coverforge

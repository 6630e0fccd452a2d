#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace framekit {

// Base of every error the library throws on purpose. Internal soundness
// violations (a lemma postcondition failing) are std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad text, shape or field mismatch, index
// out of range. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Text that does not parse. Line and column are 1-based; 0 means unknown.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0)
      : InputError(message), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class FieldMismatch : public InputError {
 public:
  FieldMismatch() : InputError("operands belong to different fields") {}
};

// An oracle enumeration would exceed its EnumerationBudget.
class BudgetExceeded : public InputError {
 public:
  using InputError::InputError;
};

// A mathematical precondition does not hold: a vector outside a span, a
// dependent sequence where a frame is required, zero inverted. The CLI maps
// these to exit code 1 (a negative answer).
class DomainError : public Error {
 public:
  using Error::Error;
};

// extend_frame was asked to extend a frame that already spans the subspace.
class FrameIsMaximal : public DomainError {
 public:
  FrameIsMaximal() : DomainError("frame spans the subspace; it is maximal") {}
};

}  // namespace framekit

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asdimlab {

// Malformed or invalid user input (graph files, words, certificate files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Positioned diagnostic for the line-oriented input grammar.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An engine invariant failed. Never swallowed: it means the engine has a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace asdimlab

#define ASDIMLAB_ENSURE(cond, msg)                                                                   \
  do {                                                                                               \
    if (!(cond)) throw ::asdimlab::InternalError(std::string("internal assertion failed: ") + (msg)); \
  } while (0)

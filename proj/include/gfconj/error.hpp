// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace gfconj {

enum class ErrorKind {
  DivisionByZero,
  InvalidInput,
  PrecisionExhausted,
  RationalCase,
  InternalInvariantViolation,
  Unsupported,
  BudgetExceeded,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define GFCONJ_ERROR_TYPE(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what)                        \
        : Error(ErrorKind::Name, what) {}                         \
  };

GFCONJ_ERROR_TYPE(DivisionByZero)
GFCONJ_ERROR_TYPE(InvalidInput)
GFCONJ_ERROR_TYPE(PrecisionExhausted)
GFCONJ_ERROR_TYPE(RationalCase)
GFCONJ_ERROR_TYPE(InternalInvariantViolation)
GFCONJ_ERROR_TYPE(Unsupported)
GFCONJ_ERROR_TYPE(BudgetExceeded)

#undef GFCONJ_ERROR_TYPE

// Parse failures carry a position; the CLI maps them to exit code 2.
class ParseError : public InvalidInput {
 public:
  ParseError(int line, int column, const std::string& msg)
      : InvalidInput(std::to_string(line) + ":" + std::to_string(column) +
                     ": " + msg),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Always-on check; certificates depend on these, so they are not asserts.
inline void ensure(bool cond, const char* what) {
  if (!cond) throw InternalInvariantViolation(what);
}

}  // namespace gfconj

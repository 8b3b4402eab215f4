#pragma once

#include <stdexcept>
#include <string>

namespace skein {

enum class ErrorCode : int {
  Ok = 0,
  DivisionByZero = 1,
  InexactDivision = 2,
  ModeMismatch = 3,
  SignatureMismatch = 4,
  IndexOutOfRange = 5,
  QuantumIntegerVanishes = 6,
  ThickJWNotDefined = 7,
  BoxNotConstructible = 8,
  MalformedWord = 9,
  NotAClosedComponent = 10,
  DanglingGreenEnd = 11,
  SyntaxError = 12,
  ElaborationError = 13,
  InvalidArgument = 14,
  Internal = 99,
};

const char* error_code_name(ErrorCode code);

class SkeinError : public std::runtime_error {
 public:
  SkeinError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry a 1-based source position.
class SyntaxError : public SkeinError {
 public:
  SyntaxError(int line, int column, const std::string& msg)
      : SkeinError(ErrorCode::SyntaxError,
                   "syntax error at " + std::to_string(line) + ":" +
                       std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace skein

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropval {

enum class ErrorKind {
  Syntax,
  DuplicateVariable,
  UnknownVariable,
  DimensionMismatch,
  RingMismatch,
  ZeroPolynomial,
  NonfiniteGeneratorValue,
  NotAHomomorphism,
  HypothesisFails,
  InvalidArgument,
  AssociativityViolation,
  NonTermination,
  UnsupportedOrder,
  DictionaryMismatch,
  NotLowerTriangular,
  IndexOutOfRange,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Input-side failures (bad text, unknown names). Everything else is a
  /// precondition violation of some operation.
  bool is_input_error() const noexcept {
    return kind_ == ErrorKind::Syntax || kind_ == ErrorKind::DuplicateVariable ||
           kind_ == ErrorKind::UnknownVariable;
  }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, int line, int column)
      : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tropval

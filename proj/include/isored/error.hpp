#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isored {

enum class ErrorKind {
  // Malformed or inconsistent input.
  Parse,
  UnknownVertex,
  DuplicateVertex,
  DuplicateEdge,
  Size,
  // Mathematical precondition violations.
  DivisionByZero,
  InvalidStructuralSet,
  NotInGPi,
  EmptyTarget,
  EmptyBas,
  FactorizationMismatch,
  OutsideSubring,
  NotSimple,
  HasLoops,
  NonconstantWeight,
};

/// True for kinds that describe bad input rather than a violated
/// mathematical precondition.
constexpr bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownVertex:
    case ErrorKind::DuplicateVertex:
    case ErrorKind::DuplicateEdge:
    case ErrorKind::Size:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the weight-expression parser; `position` is a byte offset into
/// the input text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Parse, "parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace isored

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crosscap {

enum class ErrorKind {
  OutOfRange,
  UnknownCurve,
  UnknownGenerator,
  SyntaxError,
  OneSidedCurve,
  DimensionMismatch,
  SingularMatrix,
  TooLarge,
  Overflow,
  LedgerFormat,
  ConventionFormat,
};

std::string_view toString(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(toString(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::SyntaxError, "at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace crosscap

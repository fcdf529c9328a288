#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conifold {

enum class ErrorKind {
  Syntax,
  UnknownVariable,
  NonRationalCoefficient,
  ZeroPolynomial,
  FieldMismatch,
  DivisionByZero,
  OriginRay,
  NonIsolated,
  QuantumRegion,
  IncompleteReport,
  WrongModel,
  BranchPoint,
  MalformedIncidence,
  ExactnessViolation,
  Resource,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All library failures surface as this exception; `kind()` is stable and
// is what the CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures additionally carry the byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, const std::string& message, std::size_t position)
      : Error(kind, message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace conifold

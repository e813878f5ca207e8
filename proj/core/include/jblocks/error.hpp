#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jblocks {

enum class ErrorKind {
  InvalidArgument,
  NotSquare,
  NotNilpotent,
  NotUnipotent,
  ShapeMismatch,
  TruncationTooShort,
  FactorialNotInvertible,
  NotContained,
  NonzeroConstantTerm,
  NotInvertibleLinearPart,
  ZeroLinearScalar,
  JNotInvertible,
  NotSymmetric,
  InvalidLaw,
  CharTwo,
  BadPrime,
  DoesNotStabilize,
  UnknownType,
  BlocksNotAllOdd,
  ExponentDivisible,
  NotDistinguished,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Failure of a mathematical precondition. The kind identifies which contract
/// was violated; the message carries the offending values.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace jblocks

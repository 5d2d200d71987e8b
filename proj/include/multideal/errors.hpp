#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multideal {

enum class ErrorKind {
  // geometry
  EmptyGenerators,
  DegenerateCone,
  NonpositiveScale,
  DimensionMismatch,
  RecessionMismatch,
  UnboundedDirection,
  // ideals
  AmbientMismatch,
  NonpositivePower,
  NotPolynomialAmbient,
  NotSquarefree,
  NotInSemigroup,
  ZeroIdeal,
  NotPrime,
  ParseError,
  // rings
  DuplicateVariableName,
  InvalidParameter,
  UnsupportedPresentation,
  CharacteristicDividesCoefficient,
  RayOutOfRange,
  // multiplier engine
  UnsupportedAmbient,
  NonpositiveExponent,
  UnitIdeal,
  DenominatorDivisibleByP,
  NonStabilized,
  SearchBudgetExceeded,
  // families
  NotDivisibilityChain,
  NoStabilization,
  // harness
  InvalidSpec,
  // arithmetic
  Overflow,
  // a mathematical invariant asserted at runtime did not hold
  InvariantViolation,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace multideal

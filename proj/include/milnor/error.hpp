#pragma once

#include <stdexcept>
#include <string>

namespace milnor {

enum class ErrorCode {
  NotPrime,
  FieldTooLarge,
  ZeroPolynomial,
  NewtonConditionFails,
  PrecisionExhausted,
  NotAUnit,
  ZeroElement,
  ZeroEntry,
  ContextMismatch,
  FactorizationMismatch,
  BadPosition,
  PatternMismatch,
  DegreeTooLarge,
  PrecisionTooLowToReduce,
  NonUnitEntry,
  BadModulus,
  PiEntryPresent,
  BadPrime,
  NotDivisible,
  ZeroInput,
  PrecisionTooLow,
  ReciprocityFails,
  InfinityEntryNonzero,
  NotMonic,
  NotIrreducible,
  EliminationFailed,
  ResidueReducible,
  TerminationBound,
  MixedCharRejected,
  UnknownSuite,
  ParseError,
  DivisionByZero,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// All library failures surface as this exception; `code()` names the
/// contract violation, `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace milnor

#pragma once

#include <stdexcept>
#include <string>

namespace lierep {

enum class ErrorCode {
    ZeroDenominator,
    DivisionByZero,
    NonPositive,
    SizeMismatch,
    AmbientMismatch,
    ZeroVector,
    NotNilpotent,
    NotSelfConjugate,
    EigenvalueOutsideField,
    NotSemisimpleOperator,
    NotCommuting,
    NotClosed,
    NotCartan,
    DegenerateRoot,
    NonTerminating,
    WeightNotInOrbit2,
    NotScalar,
    ZeroD,
    ExhaustionFailure,
    NotDominant,
    DiscMismatch,
    ParseError,
    ValidationError,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode c);

}  // namespace lierep

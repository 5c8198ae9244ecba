#pragma once

#include <stdexcept>
#include <string>

namespace toriq {

enum class ErrorCode {
  InvalidInput,
  NonIntegerQuotient,
  RankDeficient,
  SingularGram,
  NotSquare,
  NotFullDimensional,
  OriginNotInterior,
  DegenerateCone,
  NotFMatrix,
  OutsideMoving,
  InvalidFan,
  NonIntegralFactor,
  NotReflexive,
  TooLarge,
  InconsistentAction,
  NotFanoWeight,
  OutOfDomain,
};

inline const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonIntegerQuotient: return "NonIntegerQuotient";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::SingularGram: return "SingularGram";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::NotFMatrix: return "NotFMatrix";
    case ErrorCode::OutsideMoving: return "OutsideMoving";
    case ErrorCode::InvalidFan: return "InvalidFan";
    case ErrorCode::NonIntegralFactor: return "NonIntegralFactor";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InconsistentAction: return "InconsistentAction";
    case ErrorCode::NotFanoWeight: return "NotFanoWeight";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toriq

#pragma once

#include <stdexcept>
#include <string>

namespace llt {

enum class ErrorCode {
  NegativeDegreeShift,
  InexactDivision,
  DivisionByZero,
  SizeMismatch,
  NotStandard,
  NotAnOuterCorner,
  NotAdmissible,
  NotAbelian,
  AdmissibilityViolation,
  IrreducibleStrictEdge,
  ReductionDepthExceeded,
  ResourceLimit,
  BadParams,
  NotInStaircase,
  NotUnitInterval,
  NotInFamilies,
  StrictEdgesPresent,
  NonIntegralCoefficient,
  ParseError,
};

/// Library error carrying a machine-readable code next to the message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NegativeDegreeShift: return "NegativeDegreeShift";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotStandard: return "NotStandard";
    case ErrorCode::NotAnOuterCorner: return "NotAnOuterCorner";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::AdmissibilityViolation: return "AdmissibilityViolation";
    case ErrorCode::IrreducibleStrictEdge: return "IrreducibleStrictEdge";
    case ErrorCode::ReductionDepthExceeded: return "ReductionDepthExceeded";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NotInStaircase: return "NotInStaircase";
    case ErrorCode::NotUnitInterval: return "NotUnitInterval";
    case ErrorCode::NotInFamilies: return "NotInFamilies";
    case ErrorCode::StrictEdgesPresent: return "StrictEdgesPresent";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace llt

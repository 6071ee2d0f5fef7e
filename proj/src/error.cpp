#include "hermlie/error.hpp"

namespace hermlie {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotValidated: return "NotValidated";
    case ErrorCode::NotAComplexStructure: return "NotAComplexStructure";
    case ErrorCode::NotIntegrable: return "NotIntegrable";
    case ErrorCode::IncompatibleMetric: return "IncompatibleMetric";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotJInvariant: return "NotJInvariant";
    case ErrorCode::NotTwoStepSolvable: return "NotTwoStepSolvable";
    case ErrorCode::NotSKT: return "NotSKT";
    case ErrorCode::NotPureTypeII: return "NotPureTypeII";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidPreShear: return "InvalidPreShear";
    case ErrorCode::NotComplexShearData: return "NotComplexShearData";
    case ErrorCode::JacobiFailed: return "JacobiFailed";
    case ErrorCode::ParameterConstraintViolated: return "ParameterConstraintViolated";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnboundParameter: return "UnboundParameter";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      position_(position) {}

}  // namespace hermlie

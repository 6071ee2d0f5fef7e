#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hermlie {

enum class ErrorCode {
  IndexOutOfRange,
  DuplicateEntry,
  DimensionMismatch,
  NotValidated,
  NotAComplexStructure,
  NotIntegrable,
  IncompatibleMetric,
  NotPositiveDefinite,
  NotJInvariant,
  NotTwoStepSolvable,
  NotSKT,
  NotPureTypeII,
  PreconditionViolated,
  InvalidPreShear,
  NotComplexShearData,
  JacobiFailed,
  ParameterConstraintViolated,
  SyntaxError,
  UnboundParameter,
  UnknownName,
  ConstraintViolated,
  InvalidInput,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  /// Byte offset into the offending input, set for syntax errors.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace hermlie

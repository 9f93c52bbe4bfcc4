#include "pdclass/error.hpp"

namespace pdclass {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidTypeRank: return "INVALID_TYPE_RANK";
    case ErrorCode::kLabelOutOfRange: return "LABEL_OUT_OF_RANGE";
    case ErrorCode::kCompactForm: return "COMPACT_FORM";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kPreconditionClassical: return "PRECONDITION_CLASSICAL";
    case ErrorCode::kNotHermitian: return "NOT_HERMITIAN";
    case ErrorCode::kHermitianAnomaly: return "HERMITIAN_ANOMALY";
    case ErrorCode::kValidationFailed: return "VALIDATION_FAILED";
    case ErrorCode::kTooLarge: return "TOO_LARGE";
    case ErrorCode::kInternalInconsistency: return "INTERNAL_INCONSISTENCY";
    case ErrorCode::kParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

bool is_theorem_violation(ErrorCode code) {
  return code == ErrorCode::kInternalInconsistency ||
         code == ErrorCode::kValidationFailed ||
         code == ErrorCode::kHermitianAnomaly;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace pdclass

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdclass {

enum class ErrorCode {
  kInvalidTypeRank,
  kLabelOutOfRange,
  kCompactForm,
  kInvalidArgument,
  kPreconditionClassical,
  kNotHermitian,
  kHermitianAnomaly,
  kValidationFailed,
  kTooLarge,
  kInternalInconsistency,
  kParseError,
};

/// Upper-case identifier used in diagnostics, e.g. "INVALID_TYPE_RANK".
std::string_view error_code_name(ErrorCode code);

/// True for the codes that signal a violated theorem or a broken
/// implementation rather than bad input. The CLI maps these to exit 2.
bool is_theorem_violation(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pdclass

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoprod {

enum class ErrorCode {
  kArithmeticOverflow,
  kParentMismatch,
  kInvalidArgument,
  kStructural,
  kConsistency,
  kTheoremViolation,
  kOracleScale,
  kSearchCap,
  kSchema,
  kParse,
};

/// Machine-readable identifier, e.g. "arithmetic_overflow".
std::string_view code_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isoprod

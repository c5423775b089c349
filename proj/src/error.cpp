#include "isoprod/error.hpp"

namespace isoprod {

std::string_view code_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kArithmeticOverflow: return "arithmetic_overflow";
    case ErrorCode::kParentMismatch: return "parent_mismatch";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kStructural: return "structural_error";
    case ErrorCode::kConsistency: return "internal_consistency";
    case ErrorCode::kTheoremViolation: return "theorem_violation";
    case ErrorCode::kOracleScale: return "oracle_scale";
    case ErrorCode::kSearchCap: return "search_cap_exceeded";
    case ErrorCode::kSchema: return "schema_error";
    case ErrorCode::kParse: return "parse_error";
  }
  return "unknown";
}

}  // namespace isoprod

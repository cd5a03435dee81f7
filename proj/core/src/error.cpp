#include "lst/error.hpp"

namespace lst {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kDegenerateDesign: return "DegenerateDesign";
    case ErrorCode::kNoValidPairs: return "NoValidPairs";
    case ErrorCode::kTooManySingularDraws: return "TooManySingularDraws";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace lst

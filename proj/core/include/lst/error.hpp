#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lst {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kEmptyInput,
  kRankDeficient,
  kDegenerateDesign,
  kNoValidPairs,
  kTooManySingularDraws,
  kUnsupportedDimension,
  kSingularMatrix,
  kParse,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code so
// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace lst

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jfr {

enum class ErrorCode {
  IndexOutOfRange,
  NonFiniteWeight,
  NegativeSelfLoop,
  ParseError,
  HeaderMismatch,
  SpecInvalid,
  PotentialUnavailable,
  NegativeWeightPresent,
  NoCycleRecorded,
  Unreachable,
  ModeMismatch,
  ZeroOps,
  NegCycleResult,
  UnknownAlgorithm,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it to a stable message and exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jfr

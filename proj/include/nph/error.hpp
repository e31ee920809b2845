#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nph {

enum class ErrorCode {
  HalfTurnAmbiguity,
  ParseError,
  InvalidInput,
  NonManifoldEdge,
  Disconnected,
  PinchedVertex,
  DuplicateFace,
  NotOrientable,
  HasReflections,
  CocycleViolation,
  ResampleLimitExceeded,
  DuplicateValue,
  AmbiguousMatching,
  SizeMismatch,
  ScalesNotDistinct,
  InsufficientResolution,
  ModeUnavailable,
  NotTwoValued,
  RefinementLimit,
  UnknownGenerator,
  InvalidParams,
  MissingCoordinates,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Library error. `code()` is stable and machine readable; `detail()` is free text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace nph

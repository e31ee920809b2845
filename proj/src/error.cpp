#include "nph/error.hpp"

namespace nph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::HalfTurnAmbiguity: return "HalfTurnAmbiguity";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::PinchedVertex: return "PinchedVertex";
    case ErrorCode::DuplicateFace: return "DuplicateFace";
    case ErrorCode::NotOrientable: return "NotOrientable";
    case ErrorCode::HasReflections: return "HasReflections";
    case ErrorCode::CocycleViolation: return "CocycleViolation";
    case ErrorCode::ResampleLimitExceeded: return "ResampleLimitExceeded";
    case ErrorCode::DuplicateValue: return "DuplicateValue";
    case ErrorCode::AmbiguousMatching: return "AmbiguousMatching";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ScalesNotDistinct: return "ScalesNotDistinct";
    case ErrorCode::InsufficientResolution: return "InsufficientResolution";
    case ErrorCode::ModeUnavailable: return "ModeUnavailable";
    case ErrorCode::NotTwoValued: return "NotTwoValued";
    case ErrorCode::RefinementLimit: return "RefinementLimit";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::MissingCoordinates: return "MissingCoordinates";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace nph

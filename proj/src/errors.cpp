#include "accordion_tau/errors.hpp"

namespace accordion_tau {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::AdjacentVertices: return "AdjacentVertices";
    case ErrorCode::CrossingPair: return "CrossingPair";
    case ErrorCode::DuplicateDiagonal: return "DuplicateDiagonal";
    case ErrorCode::NotAccordion: return "NotAccordion";
    case ErrorCode::NotCrossed: return "NotCrossed";
    case ErrorCode::EmptyDissection: return "EmptyDissection";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorCode::BandDetected: return "BandDetected";
    case ErrorCode::NotGentle: return "NotGentle";
    case ErrorCode::NonPure: return "NonPure";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::LabelLengthMismatch: return "LabelLengthMismatch";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace accordion_tau

#include "mjt/error.hpp"

namespace mjt {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::NonPositiveDuration: return "NonPositiveDuration";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::ViaCoincidesWithEndpoint: return "ViaCoincidesWithEndpoint";
    case ErrorCode::TauOutOfRange: return "TauOutOfRange";
    case ErrorCode::InvalidSampleCount: return "InvalidSampleCount";
    case ErrorCode::EmptySamples: return "EmptySamples";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegeneratePolynomial: return "DegeneratePolynomial";
    case ErrorCode::NoAcceptableRoot: return "NoAcceptableRoot";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFiniteInput:
    case ErrorCode::NonPositiveDuration:
    case ErrorCode::DegenerateSegment:
    case ErrorCode::ViaCoincidesWithEndpoint:
    case ErrorCode::TauOutOfRange:
    case ErrorCode::InvalidSampleCount:
    case ErrorCode::EmptySamples:
      return true;
    default:
      return false;
  }
}

bool is_solver_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroPolynomial:
    case ErrorCode::DegeneratePolynomial:
    case ErrorCode::NoAcceptableRoot:
    case ErrorCode::IllConditioned:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace mjt

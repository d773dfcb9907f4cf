#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mjt {

enum class ErrorCode {
  NonFiniteInput,
  NonPositiveDuration,
  DegenerateSegment,
  ViaCoincidesWithEndpoint,
  TauOutOfRange,
  InvalidSampleCount,
  EmptySamples,
  ZeroPolynomial,
  DegeneratePolynomial,
  NoAcceptableRoot,
  IllConditioned,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Validation failures (bad inputs) vs solver failures (well-formed input the
// via-time solver cannot handle) map to different CLI exit codes.
bool is_validation_error(ErrorCode code) noexcept;
bool is_solver_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mjt

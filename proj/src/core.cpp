#include "mjt/core.hpp"

#include <string>

#include "mjt/error.hpp"

namespace mjt {

double ViaMotionSpec::path_scale() const {
  return base.displacement().norm() + (via - base.start).norm();
}

MotionSpec validate_motion_spec(const MotionSpec& spec) {
  if (!spec.start.is_finite() || !spec.end.is_finite() || !std::isfinite(spec.duration)) {
    throw Error(ErrorCode::NonFiniteInput, "start, end and duration must be finite");
  }
  if (spec.duration <= 0.0) {
    throw Error(ErrorCode::NonPositiveDuration,
                "duration must be positive, got " + std::to_string(spec.duration));
  }
  if (spec.start == spec.end) {
    throw Error(ErrorCode::DegenerateSegment, "start and end points coincide");
  }
  return spec;
}

ViaMotionSpec validate_via_spec(const ViaMotionSpec& spec) {
  validate_motion_spec(spec.base);
  if (!spec.via.is_finite()) {
    throw Error(ErrorCode::NonFiniteInput, "via point must be finite");
  }
  if (spec.via == spec.base.start) {
    throw Error(ErrorCode::ViaCoincidesWithEndpoint, "via point equals the start point");
  }
  if (spec.via == spec.base.end) {
    throw Error(ErrorCode::ViaCoincidesWithEndpoint, "via point equals the end point");
  }
  return spec;
}

double check_normalized_time(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw Error(ErrorCode::TauOutOfRange,
                "normalized time must lie in [0, 1], got " + std::to_string(tau));
  }
  return tau;
}

std::vector<double> uniform_tau_grid(int n) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidSampleCount,
                "need at least 2 samples, got " + std::to_string(n));
  }
  std::vector<double> grid(static_cast<std::size_t>(n));
  const int last = n - 1;
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(last);
  }
  grid.back() = 1.0;
  return grid;
}

}  // namespace mjt

#pragma once

#include <vector>

#include "mjt/core.hpp"
#include "mjt/trajectory.hpp"

namespace mjt {

/// Quintic blend 6t^5 - 15t^4 + 10t^3 and its derivatives in t; zero for
/// orders above 5.
double quintic_blend(double tau, int order);

/// Unconstrained rest-to-rest minimum-jerk motion along the chord.
/// The constructor does not validate: a zero displacement is allowed so the
/// oracle can use it as a degenerate probe.
class StraightTrajectory final : public Trajectory2D {
 public:
  explicit StraightTrajectory(const MotionSpec& spec) : spec_(spec) {}

  const MotionSpec& spec() const { return spec_; }

  double duration() const override { return spec_.duration; }
  Vec2 derivative(double tau, int order) const override;

 private:
  MotionSpec spec_;
};

struct AccelJerk {
  Vec2 acceleration;
  Vec2 jerk;
};

Point2 straight_position(const MotionSpec& spec, double tau);
Vec2 straight_velocity(const MotionSpec& spec, double tau);
AccelJerk straight_derivatives(const MotionSpec& spec, double tau);

/// `n_samples` states at uniform tau over [0, 1], both ends included.
std::vector<TrajectorySample> sample_straight(const MotionSpec& spec, int n_samples);

}  // namespace mjt

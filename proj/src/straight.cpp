#include "mjt/straight.hpp"

#include <cmath>

namespace mjt {

double quintic_blend(double tau, int order) {
  const double t = tau;
  switch (order) {
    case 0: return t * t * t * (10.0 + t * (-15.0 + t * 6.0));
    case 1: return t * t * (30.0 + t * (-60.0 + t * 30.0));
    case 2: return t * (60.0 + t * (-180.0 + t * 120.0));
    case 3: return 60.0 + t * (-360.0 + t * 360.0);
    case 4: return -360.0 + t * 720.0;
    case 5: return 720.0;
    default: return 0.0;
  }
}

Vec2 StraightTrajectory::derivative(double tau, int order) const {
  check_normalized_time(tau);
  const Vec2 delta = spec_.displacement();
  const double b = quintic_blend(tau, order);
  if (order == 0) {
    return {spec_.start.x + delta.x * b, spec_.start.y + delta.y * b};
  }
  const double time_scale = std::pow(spec_.duration, -order);
  return (b * time_scale) * delta;
}

Point2 straight_position(const MotionSpec& spec, double tau) {
  const Vec2 p = StraightTrajectory(spec).derivative(tau, 0);
  return {p.x, p.y};
}

Vec2 straight_velocity(const MotionSpec& spec, double tau) {
  return StraightTrajectory(spec).derivative(tau, 1);
}

AccelJerk straight_derivatives(const MotionSpec& spec, double tau) {
  const StraightTrajectory traj(spec);
  return {traj.derivative(tau, 2), traj.derivative(tau, 3)};
}

std::vector<TrajectorySample> sample_straight(const MotionSpec& spec, int n_samples) {
  const auto grid = uniform_tau_grid(n_samples);
  const StraightTrajectory traj(spec);
  std::vector<TrajectorySample> out;
  out.reserve(grid.size());
  for (double tau : grid) out.push_back(traj.sample(tau));
  return out;
}

}  // namespace mjt

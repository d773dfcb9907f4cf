#include "mjt/trajectory.hpp"

namespace mjt {

TrajectorySample Trajectory2D::sample(double tau) const {
  const Vec2 p = derivative(tau, 0);
  return TrajectorySample{
      .t = tau * duration(),
      .tau = tau,
      .position = {p.x, p.y},
      .velocity = derivative(tau, 1),
      .acceleration = derivative(tau, 2),
      .jerk = derivative(tau, 3),
  };
}

}  // namespace mjt

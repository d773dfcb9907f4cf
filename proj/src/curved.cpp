#include "mjt/curved.hpp"

#include <algorithm>
#include <cmath>

namespace mjt {

namespace {

Polynomial before_via(double start, double tau1, double tf, double pi, double c) {
  const double t2 = tau1 * tau1;
  const double t3 = t2 * tau1;
  const double t4 = t3 * tau1;
  const Polynomial pi_part = t4 * Polynomial{0.0, 0.0, 0.0, -30.0, 15.0} +
                             t3 * Polynomial{0.0, 0.0, 0.0, 80.0, -30.0} +
                             Polynomial{0.0, 0.0, 0.0, -60.0 * t2, 30.0 * tau1, -6.0};
  const Polynomial c_part{0.0, 0.0, 0.0, -10.0, 15.0, -6.0};
  const double k = std::pow(tf, 5) / 720.0;
  return Polynomial{start} + k * (pi * pi_part + c * c_part);
}

Polynomial correction(double tau1, double tf, double pi) {
  const Polynomial shift{-tau1, 1.0};
  const Polynomial shift2 = shift * shift;
  return (pi * std::pow(tf, 5) / 120.0) * (shift2 * shift2 * shift);
}

}  // namespace

CurvedTrajectory::CurvedTrajectory(const ViaSolution& solution)
    : CurvedTrajectory(solution.spec, solution.tau1, solution.constants) {}

CurvedTrajectory::CurvedTrajectory(const ViaMotionSpec& spec, double tau1,
                                   const ViaConstants& constants)
    : spec_(spec), tau1_(tau1) {
  const double tf = spec.base.duration;
  const std::array<Polynomial, 2> pre{
      before_via(spec.base.start.x, tau1, tf, constants.pi1, constants.c1),
      before_via(spec.base.start.y, tau1, tf, constants.pi2, constants.c2),
  };
  const std::array<Polynomial, 2> post{
      pre[0] + correction(tau1, tf, constants.pi1),
      pre[1] + correction(tau1, tf, constants.pi2),
  };
  for (int axis = 0; axis < 2; ++axis) {
    for (int k = 0; k <= kMaxOrder; ++k) {
      before_[axis][k] = pre[axis].derivative(k);
      after_[axis][k] = post[axis].derivative(k);
    }
  }
}

Vec2 CurvedTrajectory::branch_derivative(double tau, int order, Branch branch) const {
  if (order > kMaxOrder) return {};
  const auto& ladders = branch == Branch::BeforeVia ? before_ : after_;
  const double time_scale = std::pow(duration(), -order);
  return {ladders[0][order](tau) * time_scale, ladders[1][order](tau) * time_scale};
}

Vec2 CurvedTrajectory::derivative(double tau, int order) const {
  check_normalized_time(tau);
  return branch_derivative(tau, order, tau <= tau1_ ? Branch::BeforeVia : Branch::AfterVia);
}

const Polynomial& CurvedTrajectory::branch_polynomial(int axis, Branch branch) const {
  return (branch == Branch::BeforeVia ? before_ : after_)[axis][0];
}

Point2 curved_position(const ViaSolution& solution, double tau) {
  const Vec2 p = CurvedTrajectory(solution).derivative(tau, 0);
  return {p.x, p.y};
}

Vec2 curved_velocity(const ViaSolution& solution, double tau) {
  return CurvedTrajectory(solution).derivative(tau, 1);
}

AccelJerk curved_derivatives(const ViaSolution& solution, double tau) {
  const CurvedTrajectory traj(solution);
  return {traj.derivative(tau, 2), traj.derivative(tau, 3)};
}

std::vector<TrajectorySample> sample_curved(const ViaSolution& solution, int n_samples) {
  std::vector<double> grid = uniform_tau_grid(n_samples);
  const auto pos = std::lower_bound(grid.begin(), grid.end(), solution.tau1);
  if (pos == grid.end() || *pos != solution.tau1) grid.insert(pos, solution.tau1);

  const CurvedTrajectory traj(solution);
  std::vector<TrajectorySample> out;
  out.reserve(grid.size());
  for (double tau : grid) out.push_back(traj.sample(tau));
  return out;
}

}  // namespace mjt

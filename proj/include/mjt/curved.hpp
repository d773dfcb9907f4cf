#pragma once

#include <array>
#include <vector>

#include "mjt/core.hpp"
#include "mjt/polynomial.hpp"
#include "mjt/straight.hpp"
#include "mjt/tau1_solver.hpp"
#include "mjt/trajectory.hpp"

namespace mjt {

/// Piecewise quintic through a via point. Before tau1 each axis follows the
/// constrained quintic; after tau1 the term pi * tf^5 (tau - tau1)^5 / 120 is
/// added, which keeps the trajectory C^4 at the via point.
class CurvedTrajectory final : public Trajectory2D {
 public:
  enum class Branch { BeforeVia, AfterVia };

  explicit CurvedTrajectory(const ViaSolution& solution);
  /// Builds the trajectory for an arbitrary candidate tau1; the result meets
  /// the via and end constraints but is only optimal at a solver root.
  CurvedTrajectory(const ViaMotionSpec& spec, double tau1, const ViaConstants& constants);

  double tau1() const { return tau1_; }
  const ViaMotionSpec& spec() const { return spec_; }

  double duration() const override { return spec_.base.duration; }
  /// Uses the before-via branch for tau <= tau1.
  Vec2 derivative(double tau, int order) const override;
  std::vector<double> knots() const override { return {tau1_}; }

  /// Evaluates one branch regardless of which side of tau1 `tau` lies on.
  Vec2 branch_derivative(double tau, int order, Branch branch) const;

  /// Position polynomials in tau for axis 0 (x) or 1 (y).
  const Polynomial& branch_polynomial(int axis, Branch branch) const;

 private:
  static constexpr int kMaxOrder = 5;
  using Ladder = std::array<Polynomial, kMaxOrder + 1>;

  ViaMotionSpec spec_;
  double tau1_;
  // [axis][order]
  std::array<Ladder, 2> before_;
  std::array<Ladder, 2> after_;
};

Point2 curved_position(const ViaSolution& solution, double tau);
Vec2 curved_velocity(const ViaSolution& solution, double tau);
AccelJerk curved_derivatives(const ViaSolution& solution, double tau);

/// Uniform tau grid with tau1 inserted when it is not already a grid point.
std::vector<TrajectorySample> sample_curved(const ViaSolution& solution, int n_samples);

}  // namespace mjt

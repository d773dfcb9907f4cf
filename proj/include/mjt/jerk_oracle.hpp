#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mjt/core.hpp"
#include "mjt/polynomial.hpp"
#include "mjt/straight.hpp"
#include "mjt/trajectory.hpp"

namespace mjt {

/// Composite Simpson rule on [a, b] with `nodes` equally spaced nodes. An
/// even node count is bumped to the next odd one.
template <typename F>
double simpson(const F& f, double a, double b, int nodes) {
  if (nodes < 3) nodes = 3;
  if (nodes % 2 == 0) ++nodes;
  const int intervals = nodes - 1;
  const double h = (b - a) / intervals;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < intervals; ++i) {
    const double v = f(a + h * i);
    if (i % 2 == 1) {
      odd += v;
    } else {
      even += v;
    }
  }
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

inline constexpr int kJerkCostNodes = 10001;

/// Integral of |jerk|^2 over [0, duration] in m^2/s^5, Simpson on each
/// polynomial piece.
double jerk_cost(const Trajectory2D& trajectory, int nodes_per_piece = kJerkCostNodes);

struct CostScanResult {
  std::vector<double> grid;
  /// Infinite where the candidate tau1 is ill-conditioned.
  std::vector<double> costs;
  double minimizer = 0.0;
};

/// Jerk cost of the constrained trajectory for every tau1 on a uniform grid
/// over [0.01, 0.99]. grid_size >= 3.
CostScanResult cost_vs_tau1_scan(const ViaMotionSpec& spec, int grid_size);

struct FiniteDifferenceOptions {
  double step = 1e-5;
  /// Probes closer than this to a knot are skipped.
  double knot_exclusion = 1e-3;
  std::uint64_t seed = 20211019;
};

/// Largest error between the analytic derivative of `order` (1..3) and a
/// central difference of order - 1, over `n_probes` random interior tau.
/// Errors are relative to the largest analytic magnitude seen over the probes.
double finite_difference_check(const Trajectory2D& trajectory, int order, int n_probes,
                               const FiniteDifferenceOptions& options = {});

/// Straight trajectory plus tau^3 (1 - tau)^3 q(tau) on each axis, q a cubic.
/// The bump and its first two derivatives vanish at both ends.
class PerturbedStraightTrajectory final : public Trajectory2D {
 public:
  PerturbedStraightTrajectory(const MotionSpec& spec, const Polynomial& cubic_x,
                              const Polynomial& cubic_y);

  double duration() const override { return base_.duration(); }
  Vec2 derivative(double tau, int order) const override;

 private:
  StraightTrajectory base_;
  Polynomial bump_x_;
  Polynomial bump_y_;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct NamedViaCase {
  std::string name;
  ViaMotionSpec spec;
  /// Published via time; negative when there is none.
  double reference_tau1 = -1.0;
};

/// The four published curved movements plus a chord-midpoint fixture.
std::vector<NamedViaCase> reference_via_cases();

/// Runs every oracle property on the reference cases.
std::vector<CheckResult> run_verification_suite();

}  // namespace mjt

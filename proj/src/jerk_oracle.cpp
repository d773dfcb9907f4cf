#include "mjt/jerk_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "mjt/curved.hpp"
#include "mjt/error.hpp"
#include "mjt/tau1_solver.hpp"

namespace mjt {

double jerk_cost(const Trajectory2D& trajectory, int nodes_per_piece) {
  std::vector<double> breaks{0.0};
  for (double k : trajectory.knots()) {
    if (k > 0.0 && k < 1.0) breaks.push_back(k);
  }
  breaks.push_back(1.0);

  const auto integrand = [&](double tau) {
    const Vec2 j = trajectory.derivative(tau, 3);
    return j.x * j.x + j.y * j.y;
  };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    total += simpson(integrand, breaks[i], breaks[i + 1], nodes_per_piece);
  }
  // dt = duration * dtau
  return total * trajectory.duration();
}

CostScanResult cost_vs_tau1_scan(const ViaMotionSpec& spec, int grid_size) {
  if (grid_size < 3) {
    throw Error(ErrorCode::InvalidSampleCount, "cost scan needs at least 3 grid points");
  }
  constexpr double kLo = 0.01;
  constexpr double kHi = 0.99;
  CostScanResult result;
  result.grid.resize(static_cast<std::size_t>(grid_size));
  result.costs.resize(result.grid.size());
  for (int i = 0; i < grid_size; ++i) {
    result.grid[static_cast<std::size_t>(i)] = kLo + (kHi - kLo) * i / (grid_size - 1);
  }
  result.grid.back() = kHi;

  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    const double tau1 = result.grid[i];
    try {
      const ViaConstants k = compute_constants(spec, tau1);
      result.costs[i] = jerk_cost(CurvedTrajectory(spec, tau1, k));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::IllConditioned) throw;
      result.costs[i] = std::numeric_limits<double>::infinity();
    }
  }
  const auto best = std::min_element(result.costs.begin(), result.costs.end());
  result.minimizer = result.grid[static_cast<std::size_t>(best - result.costs.begin())];
  return result;
}

double finite_difference_check(const Trajectory2D& trajectory, int order, int n_probes,
                               const FiniteDifferenceOptions& options) {
  const double h = options.step;
  const double margin = h + options.knot_exclusion;
  const auto knots = trajectory.knots();
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> uniform(margin, 1.0 - margin);

  double max_diff = 0.0;
  double max_magnitude = 0.0;
  int taken = 0;
  for (int attempts = 0; taken < n_probes && attempts < 100 * n_probes; ++attempts) {
    const double tau = uniform(rng);
    const bool near_knot = std::any_of(knots.begin(), knots.end(), [&](double k) {
      return std::abs(tau - k) < options.knot_exclusion;
    });
    if (near_knot) continue;
    ++taken;
    const Vec2 analytic = trajectory.derivative(tau, order);
    const Vec2 ahead = trajectory.derivative(tau + h, order - 1);
    const Vec2 behind = trajectory.derivative(tau - h, order - 1);
    const Vec2 numeric = (1.0 / (2.0 * h * trajectory.duration())) * (ahead - behind);
    max_diff = std::max(max_diff, (numeric - analytic).norm());
    max_magnitude = std::max(max_magnitude, analytic.norm());
  }
  if (max_diff == 0.0) return 0.0;
  return max_diff / max_magnitude;
}

PerturbedStraightTrajectory::PerturbedStraightTrajectory(const MotionSpec& spec,
                                                         const Polynomial& cubic_x,
                                                         const Polynomial& cubic_y)
    : base_(spec) {
  const Polynomial window = Polynomial{0.0, 1.0} * Polynomial{1.0, -1.0};
  const Polynomial window3 = window * window * window;
  bump_x_ = window3 * cubic_x;
  bump_y_ = window3 * cubic_y;
}

Vec2 PerturbedStraightTrajectory::derivative(double tau, int order) const {
  const double time_scale = std::pow(duration(), -order);
  const Vec2 bump{bump_x_.derivative(order)(tau), bump_y_.derivative(order)(tau)};
  return base_.derivative(tau, order) + time_scale * bump;
}

std::vector<NamedViaCase> reference_via_cases() {
  const auto make = [](double xf, double yf, double x1, double y1, double tf) {
    return ViaMotionSpec{{{0.0, 0.0}, {xf, yf}, tf}, {x1, y1}};
  };
  return {
      {"case1", make(0.0, 0.3, 0.1, 0.2, 1.0), 0.553},
      {"case2", make(0.0, 0.4, 0.1, 0.1, 1.0), 0.4055},
      {"case3", make(0.3, 0.0, 0.2, 0.2, 1.0), 0.5245},
      {"case4", make(0.6, 0.0, 0.1, 0.3, 2.0), 0.4355},
      {"chord-midpoint", make(0.3, 0.0, 0.15, 0.0, 1.0), 0.5},
  };
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void straight_checks(std::vector<CheckResult>& out) {
  const MotionSpec spec{{0.0, 0.0}, {0.3, 0.0}, 1.0};
  const StraightTrajectory straight(spec);
  const double cost = jerk_cost(straight);
  const double expected = 720.0 * 0.09;
  const double rel = std::abs(cost - expected) / expected;
  out.push_back({"straight/cost-720", rel <= 1e-6, "cost " + fmt(cost) + " rel err " + fmt(rel)});

  for (int order = 1; order <= 3; ++order) {
    const double err = finite_difference_check(straight, order, 200);
    out.push_back({"straight/finite-difference-order-" + std::to_string(order), err <= 1e-6,
                   "max rel err " + fmt(err)});
  }

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-0.1, 0.1);
  int increased = 0;
  for (int i = 0; i < 100; ++i) {
    const Polynomial qx{coef(rng), coef(rng), coef(rng), coef(rng)};
    const Polynomial qy{coef(rng), coef(rng), coef(rng), coef(rng)};
    if (jerk_cost(PerturbedStraightTrajectory(spec, qx, qy)) > cost) ++increased;
  }
  out.push_back({"straight/perturbations-increase-cost", increased == 100,
                 std::to_string(increased) + "/100 perturbations increased the cost"});
}

void via_checks(const NamedViaCase& c, std::vector<CheckResult>& out) {
  const std::string prefix = c.name + "/";
  ViaSolution sol;
  try {
    sol = solve_via(c.spec);
  } catch (const Error& e) {
    out.push_back({prefix + "solve", false, e.what()});
    return;
  }
  out.push_back({prefix + "solve", std::abs(sol.tau1 - c.reference_tau1) <= 1e-3,
                 "tau1 " + fmt(sol.tau1) + " reference " + fmt(c.reference_tau1)});

  const double scale = hamiltonian_scale(c.spec, sol.constants);
  const bool residual_ok = std::abs(sol.hamiltonian_residual) <= 1e-8 * scale ||
                           sol.hamiltonian_residual == 0.0;
  out.push_back({prefix + "hamiltonian-residual", residual_ok,
                 "residual " + fmt(sol.hamiltonian_residual) + " scale " + fmt(scale)});

  const CurvedTrajectory traj(sol);
  for (int order = 1; order <= 3; ++order) {
    const double err = finite_difference_check(traj, order, 200);
    out.push_back({prefix + "finite-difference-order-" + std::to_string(order), err <= 1e-6,
                   "max rel err " + fmt(err)});
  }

  const double cost = jerk_cost(traj);
  const double cost_fine = jerk_cost(traj, 2 * kJerkCostNodes - 1);
  const double drift = std::abs(cost_fine - cost) / cost;
  out.push_back({prefix + "quadrature-convergence", drift <= 1e-9, "rel change " + fmt(drift)});

  const CostScanResult scan = cost_vs_tau1_scan(c.spec, 99);
  const double step = scan.grid[1] - scan.grid[0];
  const double gap = std::abs(scan.minimizer - sol.tau1);
  out.push_back({prefix + "scan-minimizer", gap <= step + 1e-12,
                 "scan minimizer " + fmt(scan.minimizer) + " solved " + fmt(sol.tau1)});

  const double scan_min = *std::min_element(scan.costs.begin(), scan.costs.end());
  out.push_back({prefix + "constrained-optimality", cost <= scan_min * (1.0 + 1e-12),
                 "solved cost " + fmt(cost) + " best scanned " + fmt(scan_min)});
}

}  // namespace

std::vector<CheckResult> run_verification_suite() {
  std::vector<CheckResult> out;
  straight_checks(out);
  for (const NamedViaCase& c : reference_via_cases()) via_checks(c, out);
  return out;
}

}  // namespace mjt

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mjt/cli.hpp"
#include "mjt/curved.hpp"
#include "mjt/error.hpp"
#include "mjt/export.hpp"
#include "mjt/jerk_oracle.hpp"
#include "mjt/straight.hpp"
#include "mjt/tau1_solver.hpp"
#include "test_support.hpp"

using namespace mjt;
using namespace mjt::testing;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct ReferenceCase {
  const char* name;
  ViaMotionSpec spec;
  double tau1;
};

std::vector<ReferenceCase> reference_cases() {
  return {
      {"case1", case1(), 0.553},
      {"case2", case2(), 0.4055},
      {"case3", case3(), 0.5245},
      {"case4", case4(), 0.4355},
  };
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

// Random geometries that solve without error; failures are counted so the
// caller can report them.
std::vector<ViaSolution> random_solutions(std::uint64_t seed, int count, int& failures) {
  std::mt19937_64 rng(seed);
  std::vector<ViaSolution> out;
  failures = 0;
  while (static_cast<int>(out.size()) < count) {
    try {
      out.push_back(solve_via(random_via_spec(rng)));
    } catch (const Error&) {
      ++failures;
    }
  }
  return out;
}

Outcome tau1_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const ReferenceCase& c : reference_cases()) {
    worst = std::max(worst, std::abs(solve_via(c.spec).tau1 - c.tau1));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-3 && elapsed < 1.0,
          fmt("max |tau1 - reference| = %.3g (tol 1e-3), %.3f s (limit 1 s)", worst, elapsed)};
}

Outcome constraint_satisfaction() {
  double worst = 0.0;
  for (const ReferenceCase& c : reference_cases()) {
    const ViaSolution sol = solve_via(c.spec);
    const CurvedTrajectory traj(sol);
    const double scale = c.spec.path_scale();
    const double tf = c.spec.base.duration;
    const auto pos = [&](double tau) {
      const Vec2 p = traj.derivative(tau, 0);
      return Point2{p.x, p.y};
    };
    worst = std::max(worst, dist(pos(0.0), c.spec.base.start) / scale);
    worst = std::max(worst, dist(pos(sol.tau1), c.spec.via) / scale);
    worst = std::max(worst, dist(pos(1.0), c.spec.base.end) / scale);
    for (double tau : {0.0, 1.0}) {
      worst = std::max(worst, traj.derivative(tau, 1).norm() / (scale / tf));
      worst = std::max(worst, traj.derivative(tau, 2).norm() / (scale / (tf * tf)));
    }
  }
  return {worst <= 1e-9, fmt("max normalized constraint error %.3g (tol 1e-9)", worst)};
}

Outcome hamiltonian() {
  double worst = 0.0;
  for (const ReferenceCase& c : reference_cases()) {
    const ViaSolution sol = solve_via(c.spec);
    const double scale = hamiltonian_scale(c.spec, sol.constants);
    worst = std::max(worst, std::abs(hamiltonian_residual(c.spec, sol.tau1)) / scale);
  }
  return {worst <= 1e-8, fmt("max |pi1 xdot + pi2 ydot| / scale = %.3g (tol 1e-8)", worst)};
}

Outcome stationarity_scan() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ViaMotionSpec> specs;
  for (const ReferenceCase& c : reference_cases()) specs.push_back(c.spec);
  specs.push_back(chord_midpoint());
  double worst = 0.0;
  for (const ViaMotionSpec& s : specs) {
    const CostScanResult scan = cost_vs_tau1_scan(s, 99);
    worst = std::max(worst, std::abs(scan.minimizer - solve_via(s).tau1));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 0.01 + 1e-12 && elapsed < 5.0,
          fmt("max |scan minimizer - tau1| = %.4f (tol 0.01), %.2f s (limit 5 s)", worst,
              elapsed)};
}

Outcome straight_cost_law() {
  // The constant: integral over [0, 1] of (60 - 360 t + 360 t^2)^2, from the
  // exact antiderivative of the squared polynomial.
  const Polynomial jerk_blend{60.0, -360.0, 360.0};
  const Polynomial squared = jerk_blend * jerk_blend;
  double constant = 0.0;
  for (int k = 0; k <= squared.degree(); ++k) constant += squared[k] / (k + 1);

  const Vec2 delta{0.3, -0.1};
  double worst_law = 0.0;
  std::vector<double> normalized;
  for (double tf : {0.5, 1.0, 2.0}) {
    const MotionSpec spec{{0.05, 0.2}, Point2{0.05, 0.2} + delta, tf};
    const double cost = jerk_cost(StraightTrajectory(spec));
    const double expected = 720.0 * (delta.x * delta.x + delta.y * delta.y) / std::pow(tf, 5);
    worst_law = std::max(worst_law, std::abs(cost - expected) / expected);
    normalized.push_back(cost * std::pow(tf, 5));
  }
  double worst_scaling = 0.0;
  for (double n : normalized) {
    worst_scaling = std::max(worst_scaling, std::abs(n - normalized[1]) / normalized[1]);
  }
  const bool ok = std::abs(constant - 720.0) <= 1e-12 * 720.0 && worst_law <= 1e-6 &&
                  worst_scaling <= 1e-12;
  std::ostringstream detail;
  detail << "derived constant " << constant << ", max rel err vs 720|d|^2/tf^5 " << worst_law
         << " (tol 1e-6), 1/tf^5 scaling spread " << worst_scaling;
  return {ok, detail.str()};
}

Outcome continuity() {
  using B = CurvedTrajectory::Branch;
  int failures = 0;
  const auto sols = random_solutions(606, 100, failures);
  double worst = 0.0;
  double min_fifth_jump = INFINITY;
  for (const ViaSolution& sol : sols) {
    const CurvedTrajectory traj(sol);
    const double scale = sol.spec.path_scale();
    const double tf = sol.spec.base.duration;
    for (int order = 0; order <= 4; ++order) {
      const Vec2 left = traj.branch_derivative(sol.tau1, order, B::BeforeVia);
      const Vec2 right = traj.branch_derivative(sol.tau1, order, B::AfterVia);
      worst = std::max(worst, (right - left).norm() / (scale * std::pow(tf, -order)));
    }
    const Vec2 jump = traj.branch_derivative(sol.tau1, 5, B::AfterVia) -
                      traj.branch_derivative(sol.tau1, 5, B::BeforeVia);
    min_fifth_jump = std::min(min_fifth_jump, jump.norm() / (scale * std::pow(tf, -5)));
  }
  std::ostringstream detail;
  detail << "100 specs (" << failures << " rejected while sampling), max gap orders 0-4 "
         << worst << " (tol 1e-9), smallest 5th-derivative jump " << min_fifth_jump;
  return {worst <= 1e-9 && failures == 0, detail.str()};
}

Outcome degeneracy() {
  std::vector<ViaMotionSpec> specs{chord_midpoint()};
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> coord(-0.5, 0.5);
  std::uniform_real_distribution<double> duration(0.5, 3.0);
  while (specs.size() < 20) {
    const Point2 a{coord(rng), coord(rng)};
    const Point2 b{coord(rng), coord(rng)};
    if ((b - a).norm() < 0.05) continue;
    specs.push_back({{a, b, duration(rng)}, {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}});
  }
  double worst_pi = 0.0;
  double worst_path = 0.0;
  for (const ViaMotionSpec& s : specs) {
    const ViaSolution sol = solve_via(s);
    const double scale = s.path_scale();
    const double tf = s.base.duration;
    const double pi = std::max(std::abs(sol.constants.pi1), std::abs(sol.constants.pi2));
    worst_pi = std::max(worst_pi, pi / (scale / std::pow(tf, 5)));
    for (int i = 0; i < 1000; ++i) {
      const double tau = i / 999.0;
      worst_path = std::max(
          worst_path, dist(curved_position(sol, tau), straight_position(s.base, tau)) / scale);
    }
  }
  std::ostringstream detail;
  detail << specs.size() << " chord-midpoint specs, max |pi| tf^5/L " << worst_pi
         << " (tol 1e-9), max curved-vs-straight gap / L " << worst_path << " (tol 1e-10)";
  return {worst_pi <= 1e-9 && worst_path <= 1e-10, detail.str()};
}

Outcome symmetry() {
  int failures = 0;
  const auto sols = random_solutions(808, 100, failures);
  std::mt19937_64 rng(809);
  std::uniform_real_distribution<double> factor(0.05, 20.0);
  double worst_scale = 0.0;
  double worst_reverse = 0.0;
  for (const ViaSolution& sol : sols) {
    const ViaMotionSpec& s = sol.spec;
    const double k = factor(rng);
    ViaMotionSpec scaled = s;
    scaled.base.start = {k * s.base.start.x, k * s.base.start.y};
    scaled.base.end = {k * s.base.end.x, k * s.base.end.y};
    scaled.via = {k * s.via.x, k * s.via.y};
    worst_scale = std::max(worst_scale, std::abs(solve_via(scaled).tau1 - sol.tau1));

    ViaMotionSpec reversed = s;
    std::swap(reversed.base.start, reversed.base.end);
    worst_reverse = std::max(worst_reverse, std::abs(solve_via(reversed).tau1 - (1.0 - sol.tau1)));
  }
  std::ostringstream detail;
  detail << "100 specs, max scale drift " << worst_scale << ", max reversal drift "
         << worst_reverse << " (tol 1e-9)";
  return {worst_scale <= 1e-9 && worst_reverse <= 1e-9 && failures == 0, detail.str()};
}

Outcome straight_velocity_profile() {
  const MotionSpec spec{{0.0, 0.0}, {0.3, 0.0}, 1.0};
  const double d = spec.displacement().norm();
  const int n = 100001;
  std::vector<double> speed(n);
  for (int i = 0; i < n; ++i) speed[i] = straight_velocity(spec, i / double(n - 1)).norm();
  const int peak = static_cast<int>(std::max_element(speed.begin(), speed.end()) - speed.begin());
  bool unimodal = true;
  for (int i = 1; i <= peak; ++i) unimodal = unimodal && speed[i] > speed[i - 1];
  for (int i = peak + 1; i < n; ++i) unimodal = unimodal && speed[i] < speed[i - 1];
  const double peak_tau = peak / double(n - 1);
  const double expected = 1.875 * d / spec.duration;
  const double err = std::abs(straight_velocity(spec, 0.5).norm() - expected);
  std::ostringstream detail;
  detail << "peak at tau " << peak_tau << ", v(0.5) = " << straight_velocity(spec, 0.5).x
         << " vs 1.875 |d|/tf = " << expected << ", unimodal " << (unimodal ? "yes" : "no");
  return {unimodal && peak_tau == 0.5 && err <= 1e-9, detail.str()};
}

Outcome cli_round_trip() {
  const std::vector<std::string> base{"curved", "--xf", "0",   "--yf", "0.3", "--x1",     "0.1",
                                      "--y1",   "0.2", "--tf", "1",    "--samples", "101"};
  const auto run = [&](const std::string& format) {
    std::vector<std::string> args = base;
    args.push_back("--format");
    args.push_back(format);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return std::make_pair(code, out.str());
  };
  const auto [csv_code, csv] = run("csv");
  const auto [json_code, json] = run("json");
  const bool deterministic = run("csv").second == csv && run("json").second == json;

  const CurvedTrajectory traj(solve_via(case1()));
  double worst = 0.0;
  std::size_t rows = 0;
  const auto compare = [&](const std::vector<ExportRecord>& records) {
    rows += records.size();
    for (const ExportRecord& r : records) {
      const ExportRecord fresh = ExportRecord::from_sample(traj.sample(r[1]));
      for (std::size_t i = 0; i < r.values.size(); ++i) {
        if (r[i] == fresh[i]) continue;
        worst = std::max(worst, std::abs(r[i] - fresh[i]) / std::abs(fresh[i]));
      }
    }
  };
  std::istringstream csv_in(csv);
  std::istringstream json_in(json);
  compare(read_csv(csv_in));
  compare(read_json_samples(json_in));

  std::ostringstream detail;
  detail << rows << " rows checked, max rel deviation " << worst
         << " (tol 1e-12), byte-identical reruns " << (deterministic ? "yes" : "no");
  return {csv_code == 0 && json_code == 0 && rows == 204 && worst <= 1e-12 && deterministic,
          detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 tau1 reproduction", tau1_reproduction},
      {"AC2 constraint satisfaction", constraint_satisfaction},
      {"AC3 hamiltonian residual", hamiltonian},
      {"AC4 brute-force stationarity", stationarity_scan},
      {"AC5 straight cost law", straight_cost_law},
      {"AC6 continuity at tau1", continuity},
      {"AC7 chord-midpoint degeneracy", degeneracy},
      {"AC8 scale and time-reversal symmetry", symmetry},
      {"AC9 straight velocity profile", straight_velocity_profile},
      {"AC10 CLI round trip", cli_round_trip},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    failed += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "mjt/tau1_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mjt/curved.hpp"
#include "mjt/error.hpp"
#include "mjt/jerk_oracle.hpp"

namespace mjt {

namespace {

struct AxisPolys {
  Polynomial a1;
  Polynomial a2;
};

AxisPolys axis_polys(double start, double end, double via) {
  const double d = end - start;
  const Polynomial a1 = d * Polynomial{0.0, 0.0, 0.0, 1600.0, -1200.0, 300.0} +
                        Polynomial::monomial(2, -720.0 * end + 120.0 * via + 600.0 * start) +
                        (start - via) * Polynomial{-200.0, 300.0};
  const Polynomial a2 =
      d * Polynomial{0.0, 0.0, 0.0, 200.0, -300.0, 120.0} + Polynomial{-20.0 * (via - start)};
  return {a1, a2};
}

void check_interior(double tau1) {
  if (!(tau1 > kIllConditionedBand && tau1 < 1.0 - kIllConditionedBand)) {
    std::ostringstream msg;
    msg << "tau1 = " << tau1 << " is within " << kIllConditionedBand << " of the interval ends";
    throw Error(ErrorCode::IllConditioned, msg.str());
  }
}

double max_abs_pi(const ViaConstants& k) { return std::max(std::abs(k.pi1), std::abs(k.pi2)); }

}  // namespace

AuxiliaryPolys build_auxiliary_polys(const ViaMotionSpec& spec) {
  const MotionSpec& b = spec.base;
  const AxisPolys x = axis_polys(b.start.x, b.end.x, spec.via.x);
  const AxisPolys y = axis_polys(b.start.y, b.end.y, spec.via.y);
  return AuxiliaryPolys{
      .a1 = x.a1,
      .a2 = x.a2,
      .a1p = y.a1,
      .a2p = y.a2,
      .a3 = Polynomial{0.0, 0.0, 0.0, 0.0, -90.0, 240.0, -210.0, 60.0},
      .a4 = Polynomial{0.0, 0.0, -30.0, 60.0, -30.0},
  };
}

Polynomial build_tau1_polynomial(const AuxiliaryPolys& aux) {
  const Polynomial result = aux.a3 * (aux.a2 * aux.a2 + aux.a2p * aux.a2p) +
                            Polynomial::monomial(3) * aux.a4 * (aux.a1 * aux.a2 + aux.a1p * aux.a2p);
  if (result.is_zero()) {
    throw Error(ErrorCode::DegeneratePolynomial, "via-time polynomial vanishes identically");
  }
  return result;
}

Polynomial reduced_tau1_polynomial(const ViaMotionSpec& spec) {
  const AuxiliaryPolys aux = build_auxiliary_polys(spec);
  const auto cofactor = [](double start, double end, double via) {
    const double d = end - start;
    const double v = via - start;
    return Polynomial{60.0 * v, -120.0 * v, 0.0, 120.0 * d, -60.0 * d};
  };
  const MotionSpec& b = spec.base;
  const Polynomial wx = cofactor(b.start.x, b.end.x, spec.via.x);
  const Polynomial wy = cofactor(b.start.y, b.end.y, spec.via.y);
  const Polynomial q = 30.0 * (aux.a2 * wx + aux.a2p * wy);
  if (q.is_zero()) {
    throw Error(ErrorCode::DegeneratePolynomial, "via-time polynomial vanishes identically");
  }
  return q;
}

ViaConstants compute_constants(const ViaMotionSpec& spec, double tau1) {
  check_interior(tau1);
  const AuxiliaryPolys aux = build_auxiliary_polys(spec);
  const double tf5 = std::pow(spec.base.duration, 5);
  const double rest = std::pow(1.0 - tau1, 5);
  const double c_denominator = tf5 * tau1 * tau1 * rest;
  const double pi_denominator = tf5 * std::pow(tau1, 5) * rest;
  return ViaConstants{
      .c1 = aux.a1(tau1) / c_denominator,
      .c2 = aux.a1p(tau1) / c_denominator,
      .pi1 = aux.a2(tau1) / pi_denominator,
      .pi2 = aux.a2p(tau1) / pi_denominator,
  };
}

double hamiltonian_residual(const ViaMotionSpec& spec, double tau1) {
  const ViaConstants k = compute_constants(spec, tau1);
  const AuxiliaryPolys aux = build_auxiliary_polys(spec);
  const double tf = spec.base.duration;
  const double factor = std::pow(tf, 5) / 720.0 / tf;
  const double a3 = aux.a3(tau1);
  const double a4 = aux.a4(tau1);
  const double xdot = factor * (k.pi1 * a3 + k.c1 * a4);
  const double ydot = factor * (k.pi2 * a3 + k.c2 * a4);
  return k.pi1 * xdot + k.pi2 * ydot;
}

double hamiltonian_scale(const ViaMotionSpec& spec, const ViaConstants& constants) {
  const double tf = spec.base.duration;
  const double length = spec.path_scale();
  // When the via lies on the chord pi is pure rounding noise; fall back to the
  // natural magnitude length / tf^5 of a constant in m/s^5.
  const double pi_floor = length / std::pow(tf, 5);
  return std::max(max_abs_pi(constants), pi_floor) * length / tf;
}

std::vector<RootCandidate> rank_via_candidates(const ViaMotionSpec& spec,
                                               std::span<const double> roots) {
  std::vector<RootCandidate> out;
  out.reserve(roots.size());
  for (double r : roots) {
    RootCandidate cand{.tau1 = r, .jerk_cost = std::numeric_limits<double>::infinity()};
    if (r <= kIllConditionedBand || r >= 1.0 - kIllConditionedBand) {
      cand.ill_conditioned = true;
    } else {
      cand.jerk_cost = jerk_cost(CurvedTrajectory(spec, r, compute_constants(spec, r)));
    }
    out.push_back(cand);
  }
  return out;
}

ViaSolution select_via_root(const ViaMotionSpec& spec, std::span<const double> roots) {
  if (roots.empty()) {
    throw Error(ErrorCode::NoAcceptableRoot, "via-time polynomial has no root in (0, 1)");
  }
  std::vector<RootCandidate> ranked;
  if (roots.size() == 1) {
    const bool ill = roots[0] <= kIllConditionedBand || roots[0] >= 1.0 - kIllConditionedBand;
    ranked.push_back({.tau1 = roots[0], .jerk_cost = 0.0, .ill_conditioned = ill});
  } else {
    ranked = rank_via_candidates(spec, roots);
  }

  const RootCandidate* best = nullptr;
  for (const RootCandidate& c : ranked) {
    if (!c.ill_conditioned && (best == nullptr || c.jerk_cost < best->jerk_cost)) best = &c;
  }
  if (best == nullptr) {
    std::ostringstream msg;
    msg << "every root lies within " << kIllConditionedBand << " of 0 or 1 (first: "
        << roots.front() << ")";
    throw Error(ErrorCode::IllConditioned, msg.str());
  }

  ViaSolution sol;
  sol.spec = spec;
  sol.tau1 = best->tau1;
  sol.constants = compute_constants(spec, sol.tau1);
  sol.hamiltonian_residual = hamiltonian_residual(spec, sol.tau1);
  sol.candidates = std::move(ranked);
  return sol;
}

ViaSolution solve_via(const ViaMotionSpec& spec) {
  validate_via_spec(spec);
  const std::vector<double> roots =
      find_real_roots(reduced_tau1_polynomial(spec), kRootWindow, 1.0 - kRootWindow);
  return select_via_root(spec, roots);
}

}  // namespace mjt

#pragma once

#include <span>
#include <vector>

#include "mjt/core.hpp"
#include "mjt/polynomial.hpp"

namespace mjt {

/// Per-axis numerators of the via constants plus the two geometry-free
/// polynomials of the via-velocity expression, all in the variable tau1.
/// `a1`, `a2` belong to the x axis, `a1p`, `a2p` to the y axis.
struct AuxiliaryPolys {
  Polynomial a1;
  Polynomial a2;
  Polynomial a1p;
  Polynomial a2p;
  Polynomial a3;
  Polynomial a4;
};

/// c scales the unconstrained quintic part, pi the post-via correction.
/// Units m/s^5.
struct ViaConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  double pi1 = 0.0;
  double pi2 = 0.0;
};

/// One root of the via-time polynomial that was considered by solve_via.
struct RootCandidate {
  double tau1 = 0.0;
  /// Infinite when the root lies in the ill-conditioned boundary band.
  double jerk_cost = 0.0;
  bool ill_conditioned = false;
};

struct ViaSolution {
  ViaMotionSpec spec;
  double tau1 = 0.5;
  ViaConstants constants;
  double hamiltonian_residual = 0.0;
  /// Every root found in the acceptance window, ascending. Jerk costs are
  /// only evaluated when there is more than one.
  std::vector<RootCandidate> candidates;
};

/// Roots closer than this to 0 or 1 make the constants blow up.
inline constexpr double kIllConditionedBand = 1e-4;
/// Root scan window is (kRootWindow, 1 - kRootWindow).
inline constexpr double kRootWindow = 1e-6;

AuxiliaryPolys build_auxiliary_polys(const ViaMotionSpec& spec);

/// A3 (A2^2 + A2'^2) + tau1^3 A4 (A1 A2 + A1' A2'), degree <= 17.
/// Throws DegeneratePolynomial if it vanishes identically.
Polynomial build_tau1_polynomial(const AuxiliaryPolys& aux);

/// The via-time polynomial factors as tau1^4 (1 - tau1)^4 q(tau1) with
///   q = 30 (A2 W + A2' W'),  W = 60 (D tau1^3 (2 - tau1) + V (1 - 2 tau1))
/// per axis, D = end - start and V = via - start. q has degree <= 9,
/// q(0) = -36000 |V|^2 < 0 and q(1) = 36000 |end - via|^2 > 0, so a valid
/// spec always has a root in (0, 1). Scanning q instead of the full
/// polynomial avoids the rounding-level plateau near the quadruple root at 1.
Polynomial reduced_tau1_polynomial(const ViaMotionSpec& spec);

ViaConstants compute_constants(const ViaMotionSpec& spec, double tau1);

/// pi1 * xdot(t1) + pi2 * ydot(t1), velocities in m/s.
double hamiltonian_residual(const ViaMotionSpec& spec, double tau1);

/// Reference magnitude for the residual: max(|pi1|, |pi2|, L / tf^5) times
/// the velocity scale L / tf, with L = path_scale().
double hamiltonian_scale(const ViaMotionSpec& spec, const ViaConstants& constants);

/// Scores candidate via times by jerk cost (infinite inside the
/// ill-conditioned band), in input order.
std::vector<RootCandidate> rank_via_candidates(const ViaMotionSpec& spec,
                                               std::span<const double> roots);

/// Solution for the least-cost usable candidate. Throws IllConditioned when
/// every candidate is inside the boundary band, NoAcceptableRoot when empty.
ViaSolution select_via_root(const ViaMotionSpec& spec, std::span<const double> roots);

ViaSolution solve_via(const ViaMotionSpec& spec);

}  // namespace mjt

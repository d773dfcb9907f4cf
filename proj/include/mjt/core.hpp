#pragma once

#include <cmath>
#include <vector>

namespace mjt {

/// Planar displacement or time derivative (m, m/s, m/s^2, ...).
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;

  double norm() const { return std::hypot(x, y); }
};

/// Position in the movement plane, meters.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator+(Point2 p, Vec2 d) { return {p.x + d.x, p.y + d.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;

  bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }
};

/// Rest-to-rest movement from `start` to `end` lasting `duration` seconds.
struct MotionSpec {
  Point2 start;
  Point2 end;
  double duration = 1.0;

  friend bool operator==(const MotionSpec&, const MotionSpec&) = default;

  Vec2 displacement() const { return end - start; }
};

/// Curved movement: the hand must pass through `via` at a time that is not
/// given in advance.
struct ViaMotionSpec {
  MotionSpec base;
  Point2 via;

  friend bool operator==(const ViaMotionSpec&, const ViaMotionSpec&) = default;

  /// Length scale of the geometry: |end - start| + |via - start|.
  double path_scale() const;
};

/// One time-stamped kinematic state. `tau` is t / duration.
struct TrajectorySample {
  double t = 0.0;
  double tau = 0.0;
  Point2 position;
  Vec2 velocity;
  Vec2 acceleration;
  Vec2 jerk;
};

MotionSpec validate_motion_spec(const MotionSpec& spec);
ViaMotionSpec validate_via_spec(const ViaMotionSpec& spec);

/// Throws TauOutOfRange unless 0 <= tau <= 1.
double check_normalized_time(double tau);

/// `n` uniformly spaced normalized times covering [0, 1], endpoints exact.
/// Throws InvalidSampleCount for n < 2.
std::vector<double> uniform_tau_grid(int n);

}  // namespace mjt

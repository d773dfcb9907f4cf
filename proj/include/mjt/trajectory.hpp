#pragma once

#include <vector>

#include "mjt/core.hpp"

namespace mjt {

/// A planar trajectory over normalized time [0, 1] with analytic time
/// derivatives. Implementations are immutable.
class Trajectory2D {
 public:
  virtual ~Trajectory2D() = default;

  virtual double duration() const = 0;

  /// `order`-th derivative with respect to physical time at normalized time
  /// `tau`. Order 0 is the position, returned as coordinates.
  virtual Vec2 derivative(double tau, int order) const = 0;

  /// Interior normalized times where a different polynomial piece takes over.
  virtual std::vector<double> knots() const { return {}; }

  TrajectorySample sample(double tau) const;
};

}  // namespace mjt

#pragma once

#include <array>
#include <optional>

#include "nirrt/geometry.hpp"
#include "nirrt/world.hpp"

namespace nirrt {

class Rng;

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Prolate hyperspheroid { x : |x - start| + |x - goal| <= c_best }.
class InformedSet {
 public:
  /// Throws ContractViolation unless c_best is finite and >= c_min.
  InformedSet(State start, State goal, double c_best);

  const State& start() const { return start_; }
  const State& goal() const { return goal_; }
  const State& center() const { return center_; }
  double c_best() const { return c_best_; }
  double c_min() const { return c_min_; }
  /// Columns are the ellipsoid axes in world coordinates; column 0 points
  /// from start to goal. Only the leading dim x dim block is meaningful.
  const Matrix3& rotation() const { return rotation_; }
  /// Semi-axis lengths: c_best / 2, then sqrt(c_best^2 - c_min^2) / 2.
  std::array<double, 3> radii() const;

  bool contains(const State& x) const;
  /// Axis-aligned bounds of the ellipsoid.
  Box aabb() const;

 private:
  State start_;
  State goal_;
  State center_;
  double c_best_;
  double c_min_;
  Matrix3 rotation_{};
};

/// Rotation whose first column is `axis` (normalised); determinant +1.
Matrix3 rotation_to_world(const State& axis);

bool informed_membership(const InformedSet& set, const State& x);

/// Uniform over the ellipsoid.
State informed_sample(const InformedSet& set, Rng& rng);

inline constexpr int kInformedRejectionBudget = 100000;

/// Informed sample rejected into free space when a set is given, otherwise
/// sample_free. Throws InfeasibleFocusError when the budget runs out.
State informed_or_uniform(const std::optional<InformedSet>& set, const World& world, Rng& rng);

}  // namespace nirrt

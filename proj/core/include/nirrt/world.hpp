#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nirrt/geometry.hpp"

namespace nirrt {

class Rng;

struct Box {
  State lo;
  State hi;
};

struct Ball {
  State center;
  double radius = 0.0;
};

/// Axis-aligned box or ball, in world units.
class Obstacle {
 public:
  static Obstacle box(State lo, State hi);
  static Obstacle ball(State center, double radius);

  bool is_box() const { return std::holds_alternative<Box>(shape_); }
  const Box& as_box() const { return std::get<Box>(shape_); }
  const Ball& as_ball() const { return std::get<Ball>(shape_); }
  int dim() const;

  /// Strict interior membership.
  bool contains(const State& x) const;
  /// Closed membership (boundary counts as inside).
  bool contains_closed(const State& x) const;
  /// Euclidean distance from x to the shape; 0 on or inside the shape.
  double distance_outside(const State& x) const;
  /// Axis-aligned bounds of the shape.
  Box aabb() const;

 private:
  explicit Obstacle(std::variant<Box, Ball> s) : shape_(std::move(s)) {}
  std::variant<Box, Ball> shape_;
};

/// Collision-check spacing along segments: 0.5 units in 2D, 0.25 in 3D.
double default_collision_resolution(int dim);

/// Bounds, obstacles and clearance. Immutable after construction.
class World {
 public:
  World(Box bounds, std::vector<Obstacle> obstacles, double clearance);
  /// Obstacle-free box world.
  static World empty(State lo, State hi, double clearance = 0.0);

  int dim() const { return bounds_.lo.dim(); }
  const Box& bounds() const { return bounds_; }
  const std::vector<Obstacle>& obstacles() const { return obstacles_; }
  double clearance() const { return clearance_; }
  double resolution() const { return resolution_; }
  World with_resolution(double resolution) const;
  World with_clearance(double clearance) const;
  /// Lebesgue measure of the bounds box.
  double bounds_measure() const;
  bool in_bounds(const State& x) const;

 private:
  Box bounds_;
  std::vector<Obstacle> obstacles_;
  double clearance_;
  double resolution_;
};

/// Extra generator bookkeeping carried alongside an instance. Readers that
/// do not know about it can ignore it.
struct ProblemMeta {
  std::string family;
  /// Narrow passage: the opening in the wall.
  std::optional<Box> gap;
  /// Narrow passage: the wall column including the gap.
  std::optional<Box> wall;
};

struct ProblemInstance {
  World world;
  State start;
  State goal;
  ProblemMeta meta;
};

/// Membership in X_free: inside the closed bounds and at least `clearance`
/// away from every obstacle.
bool is_free(const World& world, const State& x);

/// Checks both endpoints and interior points spaced at the world's
/// collision resolution. Symmetric in (a, b).
bool collision_free_segment(const World& world, const State& a, const State& b);

inline constexpr int kSampleFreeBudget = 100000;

/// Rejection sampling inside the bounds; throws InfeasibleSpaceError when
/// the budget is exhausted.
State sample_free(const World& world, Rng& rng);

/// Throws ContractViolation if start/goal are not free or dims disagree.
void validate_problem(const ProblemInstance& problem);

}  // namespace nirrt

#pragma once

#include <optional>
#include <span>

#include "nirrt/tree.hpp"
#include "nirrt/world.hpp"

namespace nirrt {

struct PlannerConfig {
  /// Steer step; also the guidance label radius and BFS neighbour radius.
  double eta = 10.0;
  /// Rewiring constant; computed from the world bounds when unset.
  std::optional<double> gamma;
  double goal_radius = 10.0;
  int max_iterations = 3000;
  /// Collision-check spacing; the world's default when unset.
  std::optional<double> collision_resolution;

  /// eta = goal radius = 10 in 2D, 5 in 3D; 3000 / 5000 iterations.
  static PlannerConfig defaults_for(int dim);
  void validate() const;
};

/// gamma = 2 (1 + 1/d)^(1/d) (mu(bounds) / zeta_d)^(1/d).
double default_gamma(const World& world);

/// min(gamma (log n / n)^(1/d), eta).
double rewire_radius(int n, int dim, double gamma, double eta);

/// One RRT* iteration for a given sample: steer from the nearest vertex,
/// pick the cheapest collision-free parent within the rewire radius, then
/// rewire neighbours through the new vertex. Returns the new vertex, or
/// nothing when the extension is blocked or makes no progress.
std::optional<int> extend_and_rewire(Tree& tree, const State& x_rand, const World& world,
                                     const PlannerConfig& cfg);

/// Closed ball of radius cfg.goal_radius around the goal.
bool in_goal_region(const State& x, const State& goal, const PlannerConfig& cfg);

/// min over v of cost(v) + distance(v, goal); +inf for an empty set.
double solution_cost(const Tree& tree, std::span<const int> solutions, const State& goal);

/// Argmin vertex of solution_cost, if any.
std::optional<int> best_solution(const Tree& tree, std::span<const int> solutions,
                                 const State& goal);

}  // namespace nirrt

#include "nirrt/rrt_star.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace nirrt {

PlannerConfig PlannerConfig::defaults_for(int dim) {
  require_supported_dim(dim);
  PlannerConfig cfg;
  cfg.eta = dim == 2 ? 10.0 : 5.0;
  cfg.goal_radius = cfg.eta;
  cfg.max_iterations = dim == 2 ? 3000 : 5000;
  return cfg;
}

void PlannerConfig::validate() const {
  if (!(eta > 0.0)) throw ContractViolation("planner: eta must be > 0");
  if (!(goal_radius > 0.0)) throw ContractViolation("planner: goal_radius must be > 0");
  if (max_iterations < 0) throw ContractViolation("planner: negative iteration budget");
  if (gamma && !(*gamma > 0.0)) throw ContractViolation("planner: gamma must be > 0");
}

double default_gamma(const World& world) {
  const double d = world.dim();
  return 2.0 * std::pow(1.0 + 1.0 / d, 1.0 / d) *
         std::pow(world.bounds_measure() / unit_ball_volume(world.dim()), 1.0 / d);
}

double rewire_radius(int n, int dim, double gamma, double eta) {
  if (n < 2) return 0.0;
  const double nn = n;
  return std::min(gamma * std::pow(std::log(nn) / nn, 1.0 / dim), eta);
}

std::optional<int> extend_and_rewire(Tree& tree, const State& x_rand, const World& world,
                                     const PlannerConfig& cfg) {
  const int nearest = tree.nearest(x_rand);
  const State x_new = steer(tree.vertex(nearest), x_rand, cfg.eta);
  if (x_new == tree.vertex(nearest)) return std::nullopt;
  if (!collision_free_segment(world, tree.vertex(nearest), x_new)) return std::nullopt;

  const double gamma = cfg.gamma ? *cfg.gamma : default_gamma(world);
  const double radius = rewire_radius(tree.size(), tree.dim(), gamma, cfg.eta);
  const std::vector<int> near = tree.near(x_new, radius);

  // Choose parent.
  int x_min = nearest;
  double c_min = tree.cost(nearest) + distance(tree.vertex(nearest), x_new);
  // -1 unknown, 0 blocked, 1 free; segments are symmetric so rewiring reuses these.
  std::vector<signed char> free(near.size(), -1);
  for (std::size_t i = 0; i < near.size(); ++i) {
    const int v = near[i];
    if (v == nearest) {
      free[i] = 1;
      continue;
    }
    const double c = tree.cost(v) + distance(tree.vertex(v), x_new);
    if (c < c_min) {
      free[i] = collision_free_segment(world, tree.vertex(v), x_new) ? 1 : 0;
      if (free[i]) {
        x_min = v;
        c_min = c;
      }
    }
  }
  const int id = tree.add_vertex(x_new, x_min);

  // Rewire.
  for (std::size_t i = 0; i < near.size(); ++i) {
    const int v = near[i];
    if (v == x_min || v == 0) continue;
    const double c = tree.cost(id) + distance(x_new, tree.vertex(v));
    if (!(c < tree.cost(v))) continue;
    if (free[i] < 0) free[i] = collision_free_segment(world, x_new, tree.vertex(v)) ? 1 : 0;
    if (free[i]) tree.set_parent(v, id);
  }
  return id;
}

bool in_goal_region(const State& x, const State& goal, const PlannerConfig& cfg) {
  return distance(x, goal) <= cfg.goal_radius;
}

double solution_cost(const Tree& tree, std::span<const int> solutions, const State& goal) {
  double best = std::numeric_limits<double>::infinity();
  for (int v : solutions) best = std::min(best, tree.cost(v) + distance(tree.vertex(v), goal));
  return best;
}

std::optional<int> best_solution(const Tree& tree, std::span<const int> solutions,
                                 const State& goal) {
  std::optional<int> best;
  double best_c = std::numeric_limits<double>::infinity();
  for (int v : solutions) {
    const double c = tree.cost(v) + distance(tree.vertex(v), goal);
    if (c < best_c) {
      best_c = c;
      best = v;
    }
  }
  return best;
}

}  // namespace nirrt

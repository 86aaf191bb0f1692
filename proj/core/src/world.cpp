#include "nirrt/world.hpp"

#include <algorithm>
#include <cmath>

#include "nirrt/rng.hpp"

namespace nirrt {

Obstacle Obstacle::box(State lo, State hi) {
  require_same_dim(lo, hi);
  require_supported_dim(lo.dim());
  for (int i = 0; i < lo.dim(); ++i) {
    if (!(lo[i] < hi[i])) throw ContractViolation("box obstacle needs lo < hi componentwise");
  }
  return Obstacle(Box{lo, hi});
}

Obstacle Obstacle::ball(State center, double radius) {
  require_supported_dim(center.dim());
  if (!(radius > 0.0)) throw ContractViolation("ball obstacle needs radius > 0");
  return Obstacle(Ball{center, radius});
}

int Obstacle::dim() const { return is_box() ? as_box().lo.dim() : as_ball().center.dim(); }

bool Obstacle::contains(const State& x) const {
  if (is_box()) {
    const Box& b = as_box();
    require_same_dim(b.lo, x);
    for (int i = 0; i < x.dim(); ++i) {
      if (!(x[i] > b.lo[i] && x[i] < b.hi[i])) return false;
    }
    return true;
  }
  const Ball& b = as_ball();
  return squared_distance(b.center, x) < b.radius * b.radius;
}

bool Obstacle::contains_closed(const State& x) const {
  if (is_box()) {
    const Box& b = as_box();
    require_same_dim(b.lo, x);
    for (int i = 0; i < x.dim(); ++i) {
      if (x[i] < b.lo[i] || x[i] > b.hi[i]) return false;
    }
    return true;
  }
  const Ball& b = as_ball();
  return squared_distance(b.center, x) <= b.radius * b.radius;
}

double Obstacle::distance_outside(const State& x) const {
  if (is_box()) {
    const Box& b = as_box();
    require_same_dim(b.lo, x);
    double s = 0.0;
    for (int i = 0; i < x.dim(); ++i) {
      const double d = std::max({b.lo[i] - x[i], 0.0, x[i] - b.hi[i]});
      s += d * d;
    }
    return std::sqrt(s);
  }
  const Ball& b = as_ball();
  return std::max(0.0, distance(b.center, x) - b.radius);
}

Box Obstacle::aabb() const {
  if (is_box()) return as_box();
  const Ball& b = as_ball();
  State lo = b.center;
  State hi = b.center;
  for (int i = 0; i < lo.dim(); ++i) {
    lo[i] -= b.radius;
    hi[i] += b.radius;
  }
  return {lo, hi};
}

double default_collision_resolution(int dim) { return dim == 2 ? 0.5 : 0.25; }

World::World(Box bounds, std::vector<Obstacle> obstacles, double clearance)
    : bounds_(std::move(bounds)), obstacles_(std::move(obstacles)), clearance_(clearance) {
  require_same_dim(bounds_.lo, bounds_.hi);
  require_supported_dim(bounds_.lo.dim());
  for (int i = 0; i < dim(); ++i) {
    if (!(bounds_.lo[i] < bounds_.hi[i])) throw ContractViolation("world bounds need lo < hi");
    if (!std::isfinite(bounds_.lo[i]) || !std::isfinite(bounds_.hi[i])) {
      throw ContractViolation("world bounds must be finite");
    }
  }
  if (!(clearance_ >= 0.0)) throw ContractViolation("clearance must be >= 0");
  for (const Obstacle& o : obstacles_) {
    if (o.dim() != dim()) throw ContractViolation("obstacle dimension differs from world");
    const Box a = o.aabb();
    for (int i = 0; i < dim(); ++i) {
      if (a.hi[i] < bounds_.lo[i] || a.lo[i] > bounds_.hi[i]) {
        throw ContractViolation("obstacle does not intersect world bounds");
      }
    }
  }
  resolution_ = default_collision_resolution(dim());
}

World World::empty(State lo, State hi, double clearance) {
  return World(Box{std::move(lo), std::move(hi)}, {}, clearance);
}

World World::with_resolution(double resolution) const {
  if (!(resolution > 0.0)) throw ContractViolation("collision resolution must be > 0");
  World w = *this;
  w.resolution_ = resolution;
  return w;
}

World World::with_clearance(double clearance) const {
  World w(bounds_, obstacles_, clearance);
  w.resolution_ = resolution_;
  return w;
}

double World::bounds_measure() const {
  double m = 1.0;
  for (int i = 0; i < dim(); ++i) m *= bounds_.hi[i] - bounds_.lo[i];
  return m;
}

bool World::in_bounds(const State& x) const {
  require_same_dim(bounds_.lo, x);
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] < bounds_.lo[i] || x[i] > bounds_.hi[i]) return false;
  }
  return true;
}

bool is_free(const World& world, const State& x) {
  if (!world.in_bounds(x)) return false;
  const double c = world.clearance();
  for (const Obstacle& o : world.obstacles()) {
    if (o.contains(x)) return false;
    if (c > 0.0 && o.distance_outside(x) < c) return false;
  }
  return true;
}

bool collision_free_segment(const World& world, const State& a, const State& b) {
  require_same_dim(a, b);
  require_same_dim(world.bounds().lo, a);
  // Walk from the lexicographically smaller endpoint so (a, b) and (b, a)
  // visit bit-identical points.
  const bool swap = std::lexicographical_compare(b.coords().begin(), b.coords().end(),
                                                 a.coords().begin(), a.coords().end());
  const State& p = swap ? b : a;
  const State& q = swap ? a : b;
  if (!is_free(world, p) || !is_free(world, q)) return false;
  const double len = distance(p, q);
  const auto steps = static_cast<long>(std::ceil(len / world.resolution()));
  const State delta = q - p;
  for (long k = 1; k < steps; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(steps);
    if (!is_free(world, p + delta * t)) return false;
  }
  return true;
}

State sample_free(const World& world, Rng& rng) {
  const Box& b = world.bounds();
  for (int attempt = 0; attempt < kSampleFreeBudget; ++attempt) {
    State x = sample_uniform_box(b.lo, b.hi, rng);
    if (is_free(world, x)) return x;
  }
  throw InfeasibleSpaceError("sample_free: no free state found in " +
                             std::to_string(kSampleFreeBudget) + " attempts");
}

void validate_problem(const ProblemInstance& problem) {
  require_same_dim(problem.world.bounds().lo, problem.start);
  require_same_dim(problem.start, problem.goal);
  if (!problem.start.is_finite() || !problem.goal.is_finite()) {
    throw ContractViolation("start/goal must be finite");
  }
  if (!is_free(problem.world, problem.start)) throw ContractViolation("start is not free");
  if (!is_free(problem.world, problem.goal)) throw ContractViolation("goal is not free");
}

}  // namespace nirrt

#include "nirrt/problem_gen.hpp"

#include <algorithm>

#include "nirrt/grid_oracle.hpp"
#include "nirrt/rng.hpp"

namespace nirrt {

ProblemInstance gen_center_block(double map_width, double block_width, Rng& rng) {
  using namespace center_block;
  if (map_width < kStartGoalDistance) {
    throw ContractViolation("center block: map width below start-goal distance");
  }
  if (block_width < 0.0) throw ContractViolation("center block: negative block width");
  if (block_width >= kStartGoalDistance) {
    throw GenerationError("center block: block would cover start or goal");
  }
  const double height = rng.uniform(kMinBlockHeight, std::min(kMaxBlockHeight, map_width));
  if (height >= map_width) throw GenerationError("center block: block leaves no path");
  const double mid = map_width / 2.0;
  std::vector<Obstacle> obstacles;
  if (block_width > 0.0) {
    obstacles.push_back(Obstacle::box({mid - block_width / 2.0, mid - height / 2.0},
                                      {mid + block_width / 2.0, mid + height / 2.0}));
  }
  World world(Box{{0.0, 0.0}, {map_width, map_width}}, std::move(obstacles), 0.0);
  ProblemInstance p{std::move(world), State{mid - kStartGoalDistance / 2.0, mid},
                    State{mid + kStartGoalDistance / 2.0, mid}, {}};
  p.meta.family = "center-block";
  return p;
}

std::pair<double, double> narrow_passage_gap_range(double gap_height) {
  using namespace narrow_passage;
  const double wall_h = kWallHi - kWallLo;
  const double margin = std::min(kGapMargin, (wall_h - gap_height) / 2.0);
  return {kWallLo + margin, kWallHi - margin - gap_height};
}

ProblemInstance gen_narrow_passage(double gap_height, Rng& rng) {
  using namespace narrow_passage;
  if (!(gap_height > 0.0) || gap_height > kWallHi - kWallLo) {
    throw ContractViolation("narrow passage: gap height must be in (0, wall height]");
  }
  const auto [lo, hi] = narrow_passage_gap_range(gap_height);
  const double gap_lo = rng.uniform(lo, hi);
  const double gap_hi = gap_lo + gap_height;
  const double x0 = kWorldSize / 2.0 - kWallThickness / 2.0;
  const double x1 = kWorldSize / 2.0 + kWallThickness / 2.0;
  std::vector<Obstacle> obstacles;
  if (gap_lo > kWallLo) obstacles.push_back(Obstacle::box({x0, kWallLo}, {x1, gap_lo}));
  if (gap_hi < kWallHi) obstacles.push_back(Obstacle::box({x0, gap_hi}, {x1, kWallHi}));
  World world(Box{{0.0, 0.0}, {kWorldSize, kWorldSize}}, std::move(obstacles), 0.0);
  const double mid = kWorldSize / 2.0;
  ProblemInstance p{std::move(world), State{mid - kStartGoalDistance / 2.0, mid},
                    State{mid + kStartGoalDistance / 2.0, mid}, {}};
  p.meta.family = "narrow-passage";
  p.meta.gap = Box{{x0, gap_lo}, {x1, gap_hi}};
  p.meta.wall = Box{{x0, kWallLo}, {x1, kWallHi}};
  return p;
}

World close_gap(const ProblemInstance& problem) {
  if (!problem.meta.wall) throw ContractViolation("close_gap: instance has no wall metadata");
  const Box& w = *problem.meta.wall;
  std::vector<Obstacle> obstacles{Obstacle::box(w.lo, w.hi)};
  return World(problem.world.bounds(), std::move(obstacles), problem.world.clearance())
      .with_resolution(problem.world.resolution());
}

namespace {

ProblemInstance gen_random_world(int dim, double size, double clearance,
                                 const random_world::Distribution& dist, const char* family,
                                 Rng& rng) {
  using namespace random_world;
  const State lo = dim == 2 ? State{0.0, 0.0} : State{0.0, 0.0, 0.0};
  State hi = lo;
  for (int i = 0; i < dim; ++i) hi[i] = size;
  const double min_sep = kMinSeparationFraction * size;

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Obstacle> obstacles;
    const int n_boxes = rng.integer(dist.min_boxes, dist.max_boxes);
    for (int b = 0; b < n_boxes; ++b) {
      const State c = sample_uniform_box(lo, hi, rng);
      State blo(dim);
      State bhi(dim);
      for (int i = 0; i < dim; ++i) {
        const double side = rng.uniform(dist.min_side, dist.max_side);
        blo[i] = c[i] - side / 2.0;
        bhi[i] = c[i] + side / 2.0;
      }
      obstacles.push_back(Obstacle::box(blo, bhi));
    }
    const int n_balls = rng.integer(dist.min_balls, dist.max_balls);
    for (int b = 0; b < n_balls; ++b) {
      const State c = sample_uniform_box(lo, hi, rng);
      obstacles.push_back(Obstacle::ball(c, rng.uniform(dist.min_radius, dist.max_radius)));
    }
    World world(Box{lo, hi}, std::move(obstacles), clearance);
    const OccupancyGrid grid = rasterize(world);

    // A handful of start/goal draws per world before giving up on it.
    for (int pair = 0; pair < 10; ++pair) {
      State start(dim);
      State goal(dim);
      try {
        start = sample_free(world, rng);
        goal = sample_free(world, rng);
      } catch (const InfeasibleSpaceError&) {
        break;
      }
      if (distance(start, goal) < min_sep) continue;
      const auto sc = grid.cell_of(start);
      const auto gc = grid.cell_of(goal);
      if (!sc || !gc || grid.occupied(*sc) || grid.occupied(*gc)) continue;
      if (!astar(grid, *sc, *gc)) continue;
      ProblemInstance p{world, start, goal, {}};
      p.meta.family = family;
      return p;
    }
  }
  throw GenerationError(std::string(family) + ": no feasible instance after " +
                        std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace

ProblemInstance gen_random_world_2d(Rng& rng) {
  using namespace random_world;
  return gen_random_world(2, kSize2d, kClearance2d, kDist2d, "random2d", rng);
}

ProblemInstance gen_random_world_3d(Rng& rng) {
  using namespace random_world;
  return gen_random_world(3, kSize3d, kClearance3d, kDist3d, "random3d", rng);
}

}  // namespace nirrt

#include <gtest/gtest.h>

#include <cmath>

#include "nirrt/grid_oracle.hpp"
#include "nirrt/problem_gen.hpp"
#include "nirrt/providers.hpp"
#include "nirrt/rng.hpp"
#include "nirrt/visibility_graph.hpp"
#include "oracles.hpp"

using namespace nirrt;

namespace {

OccupancyGrid random_grid(int dim, int n, double density, Rng& rng) {
  OccupancyGrid g(dim, dim == 2 ? State{0, 0} : State{0, 0, 0}, 1.0,
                  Cell{n, n, dim == 3 ? n : 1});
  for (std::size_t i = 0; i < g.size(); ++i) g.set_occupied(g.unlinear(i), rng.uniform01() < density);
  return g;
}

}  // namespace

TEST(Rasterize, EmptyWorldAllFree) {
  const OccupancyGrid g = rasterize(World::empty(State{0, 0}, State{40, 30}));
  EXPECT_EQ(g.dims()[0], 40);
  EXPECT_EQ(g.dims()[1], 30);
  EXPECT_EQ(g.occupied_count(), 0u);
}

TEST(Rasterize, BoxFootprintWithClearance) {
  const World w({State{0, 0}, State{50, 50}}, {Obstacle::box(State{20, 20}, State{30, 30})}, 3);
  const OccupancyGrid g = rasterize(w);
  EXPECT_EQ(g.dilation_radius(), 3);
  EXPECT_EQ(g.occupied_count(), 16u * 16u);
  EXPECT_TRUE(g.occupied({17, 17, 0}));
  EXPECT_FALSE(g.occupied({16, 17, 0}));
  EXPECT_TRUE(g.occupied({32, 32, 0}));
  EXPECT_FALSE(g.occupied({33, 32, 0}));
}

TEST(Rasterize, ThreeDimensionalDilationRadius) {
  const World w({State{0, 0, 0}, State{20, 20, 20}}, {Obstacle::ball(State{10, 10, 10}, 1)}, 2);
  const OccupancyGrid g = rasterize(w);
  EXPECT_EQ(g.dilation_radius(), 2);
  // Euclidean ball dilation: axis neighbours at 2 are in, the cube corner at (2,2,2) is not.
  EXPECT_TRUE(g.occupied({9 + 2, 9, 9}));
  EXPECT_FALSE(g.occupied({9 + 3, 9 + 3, 9 + 3}));
}

TEST(AStar, StartEqualsGoal) {
  const OccupancyGrid g = rasterize(World::empty(State{0, 0}, State{10, 10}));
  const auto p = astar(g, Cell{3, 3, 0}, Cell{3, 3, 0});
  ASSERT_TRUE(p);
  EXPECT_EQ(p->cells.size(), 1u);
  EXPECT_EQ(p->cost, 0.0);
}

TEST(AStar, DiagonalChain) {
  const OccupancyGrid g = rasterize(World::empty(State{0, 0}, State{10, 10}));
  const auto p = astar(g, Cell{0, 0, 0}, Cell{9, 9, 0});
  ASSERT_TRUE(p);
  EXPECT_DOUBLE_EQ(p->cost, 9 * std::sqrt(2.0));
  EXPECT_NEAR(oracles::dijkstra_cost(g, {0, 0, 0}, {9, 9, 0}).value(), p->cost, 1e-9);
}

TEST(AStar, OccupiedEndpointThrows) {
  OccupancyGrid g = rasterize(World::empty(State{0, 0}, State{10, 10}));
  g.set_occupied({0, 0, 0}, true);
  EXPECT_THROW(astar(g, Cell{0, 0, 0}, Cell{5, 5, 0}), ContractViolation);
  EXPECT_THROW(astar(g, Cell{5, 5, 0}, Cell{0, 0, 0}), ContractViolation);
}

TEST(AStar, Disconnected) {
  OccupancyGrid g = rasterize(World::empty(State{0, 0}, State{10, 10}));
  for (int y = 0; y < 10; ++y) g.set_occupied({5, y, 0}, true);
  EXPECT_FALSE(astar(g, Cell{0, 0, 0}, Cell{9, 9, 0}));
}

TEST(AStar, MatchesDijkstraOnRandomGrids) {
  Rng rng(123);
  int compared = 0;
  for (int k = 0; k < 200; ++k) {
    const int dim = k % 4 == 3 ? 3 : 2;
    const int n = dim == 2 ? 32 : 16;
    OccupancyGrid g = random_grid(dim, n, 0.3, rng);
    const Cell s{0, 0, 0};
    const Cell t{n - 1, n - 1, dim == 3 ? n - 1 : 0};
    g.set_occupied(s, false);
    g.set_occupied(t, false);
    const auto a = astar(g, s, t);
    const auto d = oracles::dijkstra_cost(g, s, t);
    ASSERT_EQ(a.has_value(), d.has_value());
    if (a) {
      EXPECT_NEAR(a->cost, *d, 1e-9);
      EXPECT_EQ(oracles::path_steps(a->cells), *oracles::dijkstra_steps(g, s, t));
      ++compared;
    }
  }
  EXPECT_GT(compared, 50);
}

TEST(AStar, PathIsConnectedAndFree) {
  Rng rng(9);
  const OccupancyGrid g = random_grid(2, 32, 0.2, rng);
  for (int k = 0; k < 20; ++k) {
    const Cell s{static_cast<int>(rng.index(32)), static_cast<int>(rng.index(32)), 0};
    const Cell t{static_cast<int>(rng.index(32)), static_cast<int>(rng.index(32)), 0};
    if (g.occupied(s) || g.occupied(t)) continue;
    const auto p = astar(g, s, t);
    if (!p) continue;
    EXPECT_EQ(p->cells.front(), s);
    EXPECT_EQ(p->cells.back(), t);
    double len = 0;
    for (std::size_t i = 1; i < p->cells.size(); ++i) {
      const auto& a = p->cells[i - 1];
      const auto& b = p->cells[i];
      EXPECT_FALSE(g.occupied(b));
      EXPECT_LE(std::abs(a[0] - b[0]), 1);
      EXPECT_LE(std::abs(a[1] - b[1]), 1);
      len += distance(g.center(a), g.center(b));
    }
    EXPECT_NEAR(len, p->cost, 1e-9);
  }
}

TEST(AStar, EnvelopeAgainstVisibilityGraph) {
  for (int s = 0; s < 20; ++s) {
    Rng rng(s);
    const ProblemInstance p =
        gen_center_block(center_block::kMapWidths[s % 5], rng.uniform(10, 80), rng);
    const double exact = visibility_shortest_path(p.world, p.start, p.goal)->cost;
    const OccupancyGrid g = rasterize(p.world);
    const auto path = astar(g, p.start, p.goal);
    ASSERT_TRUE(path);
    // Cell-centre endpoints and closed-box rasterization shift the grid
    // path by at most a cell or two.
    EXPECT_GE(path->cost, exact - 4.0);
    EXPECT_LE(path->cost, 1.10 * exact);
  }
}

TEST(LabelGuidance, OnPathAndBoundary) {
  const OccupancyGrid g = rasterize(World::empty(State{0, 0}, State{50, 50}));
  const GridPath path{{{10, 10, 0}}, 0.0};
  const State c = g.center({10, 10, 0});
  const std::vector<State> pts{c, c + State{10, 0}, c + State{10 + 1e-9, 0}, c + State{0, 30}};
  const auto l = label_guidance(g, path, pts, 10.0);
  EXPECT_EQ(l, (std::vector<bool>{true, true, false, false}));
}

TEST(LabelGuidance, StraightPathIsCapsuleBruteForce) {
  const OccupancyGrid g = rasterize(World::empty(State{0, 0}, State{100, 60}));
  const auto path = astar(g, Cell{10, 30, 0}, Cell{90, 30, 0});
  ASSERT_TRUE(path);
  std::vector<State> pts;
  for (double x = 0; x <= 100; x += 1.3) {
    for (double y = 0; y <= 60; y += 0.7) pts.push_back(State{x, y});
  }
  const auto l = label_guidance(g, *path, pts, 10.0);
  const State a = g.center({10, 30, 0});
  const State b = g.center({90, 30, 0});
  for (std::size_t i = 0; i < pts.size(); ++i) {
    // All path cells lie on the segment, spaced 1 apart.
    double best = 1e9;
    for (const Cell& c : path->cells) best = std::min(best, distance(pts[i], g.center(c)));
    EXPECT_EQ(l[i], best <= 10.0);
    const double seg = oracles::point_segment_distance(pts[i], a, b);
    if (seg <= 9.9) EXPECT_TRUE(l[i]);
    if (seg > 10.0) EXPECT_FALSE(l[i]);
  }
}

TEST(LabelGuidance, MonotoneInEta) {
  Rng rng(4);
  const OccupancyGrid g = rasterize(World::empty(State{0, 0}, State{64, 64}));
  const auto path = astar(g, Cell{3, 5, 0}, Cell{60, 40, 0});
  std::vector<State> pts;
  for (int k = 0; k < 2000; ++k) pts.push_back(sample_uniform_box(State{0, 0}, State{64, 64}, rng));
  std::vector<bool> prev(pts.size(), false);
  for (double eta : {0.5, 2.0, 5.0, 10.0, 20.0}) {
    const auto l = label_guidance(g, *path, pts, eta);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (prev[i]) EXPECT_TRUE(l[i]);
    }
    prev = l;
  }
}

TEST(OracleProvider, EmptyWorldCapsule) {
  const ProblemInstance p{World::empty(State{0, 0}, State{224, 224}), State{62, 112},
                          State{162, 112}, {}};
  Rng rng(3);
  std::vector<State> pts;
  for (int k = 0; k < 5000; ++k) pts.push_back(sample_free(p.world, rng));
  const auto probs = oracle_guidance(p, pts, 10.0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double seg = oracles::point_segment_distance(pts[i], p.start, p.goal);
    if (seg <= 9.0) EXPECT_EQ(probs[i], 1.0) << pts[i].to_string();
    if (seg > 11.0) EXPECT_EQ(probs[i], 0.0) << pts[i].to_string();
  }
}

TEST(OracleProvider, DisconnectedAllZero) {
  const World w({State{0, 0}, State{100, 100}}, {Obstacle::box(State{45, -1}, State{55, 101})}, 0);
  const ProblemInstance p{w, State{10, 50}, State{90, 50}, {}};
  const std::vector<State> pts{State{10, 50}, State{90, 50}, State{30, 30}};
  for (double v : oracle_guidance(p, pts, 10.0)) EXPECT_EQ(v, 0.0);
}

TEST(OracleProvider, NarrowPassageRoutesThroughGap) {
  for (double h : narrow_passage::kGapHeights) {
    Rng rng(static_cast<std::uint64_t>(h));
    const ProblemInstance p = gen_narrow_passage(h, rng);
    const Box gap = *p.meta.gap;
    std::vector<State> pts;
    for (int k = 0; k < 3000; ++k) pts.push_back(sample_free(p.world, rng));
    for (double x = gap.lo[0]; x <= gap.hi[0]; x += 1) pts.push_back(State{x, (gap.lo[1] + gap.hi[1]) / 2});
    const auto probs = oracle_guidance(p, pts, 10.0);
    int in_gap = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const State& x = pts[i];
      if (probs[i] > 0.5 && x[0] >= gap.lo[0] && x[0] <= gap.hi[0] && x[1] >= gap.lo[1] &&
          x[1] <= gap.hi[1]) {
        ++in_gap;
      }
    }
    EXPECT_GT(in_gap, 0) << "gap height " << h;
  }
}

TEST(OracleProvider, SnapsEndpointInDilatedCell) {
  const World w({State{0, 0}, State{100, 100}}, {Obstacle::box(State{40, 40}, State{60, 60})}, 3);
  OracleGuidanceProvider oracle(w, 10.0);
  // (37, 50) sits exactly at the clearance distance, so it is free, but
  // its cell lies in the dilated band.
  const std::vector<State> pts{State{30, 50}, State{90, 90}};
  ASSERT_TRUE(is_free(w, State{37, 50}));
  ASSERT_TRUE(oracle.grid().occupied(*oracle.grid().cell_of(State{37, 50})));
  GuidanceRequest r{{}, {}, pts, State{37, 50}, State{90, 90}};
  const auto probs = oracle.infer(r);
  EXPECT_EQ(probs[1], 1.0);
  EXPECT_TRUE(oracle.last_path().has_value());
}

TEST(NearestFreeCell, SearchesOutward) {
  OccupancyGrid g = rasterize(World::empty(State{0, 0}, State{10, 10}));
  g.set_occupied({5, 5, 0}, true);
  const auto c = nearest_free_cell(g, State{5.5, 5.5}, 2);
  ASSERT_TRUE(c);
  EXPECT_EQ(std::abs((*c)[0] - 5) + std::abs((*c)[1] - 5), 1);
  EXPECT_FALSE(nearest_free_cell(g, State{5.5, 5.5}, 0));
}

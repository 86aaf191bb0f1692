#include <benchmark/benchmark.h>

#include <vector>

#include "nirrt/grid_oracle.hpp"
#include "nirrt/guidance.hpp"
#include "nirrt/problem_gen.hpp"
#include "nirrt/rng.hpp"
#include "nirrt/rrt_star.hpp"
#include "nirrt/tree.hpp"

using namespace nirrt;

namespace {

const World kEmpty = World::empty(State{0, 0}, State{224, 224});

Tree grown_tree(int n) {
  Tree tree(State{112, 112});
  const PlannerConfig cfg = PlannerConfig::defaults_for(2);
  Rng rng(1);
  while (tree.size() < n) extend_and_rewire(tree, sample_free(kEmpty, rng), kEmpty, cfg);
  return tree;
}

void BM_Nearest(benchmark::State& st) {
  const Tree tree = grown_tree(static_cast<int>(st.range(0)));
  Rng rng(2);
  for (auto _ : st) benchmark::DoNotOptimize(tree.nearest(sample_free(kEmpty, rng)));
}
BENCHMARK(BM_Nearest)->Arg(500)->Arg(3000);

void BM_ExtendAndRewire(benchmark::State& st) {
  Rng gen(3);
  const ProblemInstance p = gen_narrow_passage(8, gen);
  const PlannerConfig cfg = PlannerConfig::defaults_for(2);
  Tree tree(p.start);
  Rng rng(4);
  for (auto _ : st) {
    if (tree.size() > 3000) {
      st.PauseTiming();
      tree = Tree(p.start);
      st.ResumeTiming();
    }
    benchmark::DoNotOptimize(extend_and_rewire(tree, sample_free(p.world, rng), p.world, cfg));
  }
}
BENCHMARK(BM_ExtendAndRewire);

void BM_AStar(benchmark::State& st) {
  Rng gen(5);
  const ProblemInstance p = gen_random_world_2d(gen);
  const OccupancyGrid grid = rasterize(p.world);
  for (auto _ : st) benchmark::DoNotOptimize(astar(grid, p.start, p.goal));
}
BENCHMARK(BM_AStar)->Unit(benchmark::kMillisecond);

void BM_FarthestPoint(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  Rng rng(6);
  std::vector<State> candidates;
  for (std::size_t i = 0; i < 4 * n; ++i) candidates.push_back(sample_free(kEmpty, rng));
  for (auto _ : st) benchmark::DoNotOptimize(farthest_point_downsample(candidates, n));
}
BENCHMARK(BM_FarthestPoint)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#pragma once

// Independent reference implementations used only by the tests. None of
// these share code with the library beyond the plain data types.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nirrt/geometry.hpp"
#include "nirrt/grid_oracle.hpp"
#include "nirrt/guidance.hpp"
#include "nirrt/providers.hpp"

namespace oracles {

/// Axis, face-diagonal and cube-diagonal step counts of a grid path.
using StepCounts = std::array<int, 3>;

/// Dijkstra over the 8/26-connected grid. Tracks integer step counts so the
/// optimum is exact: 1, sqrt 2 and sqrt 3 are rationally independent, so two
/// paths of equal length have equal counts.
std::optional<StepCounts> dijkstra_steps(const nirrt::OccupancyGrid& grid,
                                         const nirrt::Cell& start, const nirrt::Cell& goal);
std::optional<double> dijkstra_cost(const nirrt::OccupancyGrid& grid, const nirrt::Cell& start,
                                    const nirrt::Cell& goal);

/// Step counts of a cell sequence.
StepCounts path_steps(const std::vector<nirrt::Cell>& cells);
double steps_length(const StepCounts& s);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  void unite(std::size_t a, std::size_t b);
  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

 private:
  std::vector<std::size_t> parent_;
};

/// Connectivity of {from} + points + {to} under edges of length <= eta.
bool union_find_connected(std::span<const nirrt::State> points, const nirrt::State& from,
                          const nirrt::State& to, double eta);

/// Linear-scan nearest with lowest-index ties.
int brute_nearest(std::span<const nirrt::State> pts, const nirrt::State& x);
std::vector<int> brute_near(std::span<const nirrt::State> pts, const nirrt::State& x, double r);

/// Distance from x to the closest point of segment [a, b].
double point_segment_distance(const nirrt::State& x, const nirrt::State& a, const nirrt::State& b);

/// One-sample Kolmogorov-Smirnov statistic against a CDF on sorted data.
template <typename Cdf>
double ks_statistic(std::vector<double> xs, Cdf cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

double min_pairwise_distance(std::span<const nirrt::State> pts);
double mean_nearest_neighbor_distance(std::span<const nirrt::State> pts);

/// Returns the same probability for every point.
class ConstantProvider final : public nirrt::GuidanceProvider {
 public:
  explicit ConstantProvider(double p) : p_(p) {}
  std::vector<double> infer(const nirrt::GuidanceRequest& r) override {
    ++calls;
    return std::vector<double>(r.world_points.size(), p_);
  }
  int calls = 0;

 private:
  double p_;
};

/// Always fails.
class FailingProvider final : public nirrt::GuidanceProvider {
 public:
  std::vector<double> infer(const nirrt::GuidanceRequest&) override;
  int calls = 0;
};

/// Oracle labels restricted to points within `reach` of the request's
/// current endpoints: a provider that only sees locally.
class LocalityProvider final : public nirrt::GuidanceProvider {
 public:
  LocalityProvider(const nirrt::World& world, double eta, double reach)
      : oracle_(world, eta), reach_(reach) {}
  std::vector<double> infer(const nirrt::GuidanceRequest& r) override;
  std::vector<std::pair<nirrt::State, nirrt::State>> endpoints;

 private:
  nirrt::OracleGuidanceProvider oracle_;
  double reach_;
};

}  // namespace oracles

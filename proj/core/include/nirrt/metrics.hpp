#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nirrt/run_record.hpp"

namespace nirrt {

/// First iteration whose best cost is <= (1 + tol) * c_opt.
std::optional<int> metric_iters_to_threshold(const RunRecord& record, double c_opt, double tol);

/// First iteration whose best cost is strictly below the flanking cost,
/// i.e. the first path that must route through the gap.
std::optional<int> metric_through_gap(const RunRecord& record, double flank_cost);

struct RelativeCostRow {
  std::string planner;
  int checkpoint = 0;
  double mean = 0.0;
  double ci95 = 0.0;
  int n = 0;
  /// Runs without a solution, or too short to reach the checkpoint.
  int excluded = 0;
  /// Runs whose problem/seed has no RRT* baseline solution.
  int missing_baseline = 0;
};

/// Cost at (first solution + checkpoint) divided by the RRT* initial
/// solution cost on the same problem and seed, averaged per planner.
std::vector<RelativeCostRow> metric_relative_cost(std::span<const RunRecord> records,
                                                  std::span<const int> checkpoints,
                                                  const std::string& baseline = "rrt-star");

struct SummaryStat {
  int n = 0;
  double mean = 0.0;
  /// Normal-approximation 95% half width.
  double ci95 = 0.0;
  double median = 0.0;
};

SummaryStat summarize(std::vector<double> values);

/// Median of integer-valued metrics where an absent value counts as
/// `censored_value`.
double censored_median(std::span<const std::optional<int>> values, int censored_value);

}  // namespace nirrt

#include "nirrt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace nirrt {

std::optional<int> metric_iters_to_threshold(const RunRecord& record, double c_opt, double tol) {
  if (!(c_opt > 0.0)) throw ContractViolation("metric_iters_to_threshold: c_opt must be > 0");
  const double threshold = (1.0 + tol) * c_opt;
  for (const TracePoint& p : record.trace) {
    if (p.cost <= threshold) return p.iteration;
  }
  return std::nullopt;
}

std::optional<int> metric_through_gap(const RunRecord& record, double flank_cost) {
  for (const TracePoint& p : record.trace) {
    if (p.cost < flank_cost) return p.iteration;
  }
  return std::nullopt;
}

SummaryStat summarize(std::vector<double> values) {
  SummaryStat s;
  s.n = static_cast<int>(values.size());
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / s.n;
  if (s.n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.ci95 = 1.96 * std::sqrt(ss / (s.n - 1)) / std::sqrt(static_cast<double>(s.n));
  }
  std::sort(values.begin(), values.end());
  s.median = s.n % 2 ? values[s.n / 2] : 0.5 * (values[s.n / 2 - 1] + values[s.n / 2]);
  return s;
}

double censored_median(std::span<const std::optional<int>> values, int censored_value) {
  std::vector<double> v;
  v.reserve(values.size());
  for (const auto& x : values) v.push_back(x ? *x : censored_value);
  return summarize(std::move(v)).median;
}

std::vector<RelativeCostRow> metric_relative_cost(std::span<const RunRecord> records,
                                                  std::span<const int> checkpoints,
                                                  const std::string& baseline) {
  std::map<std::pair<std::string, std::uint64_t>, double> base_cost;
  for (const RunRecord& r : records) {
    if (r.planner != baseline) continue;
    if (const auto f = r.first_solution_iteration()) {
      base_cost[{r.problem_id, r.seed}] = r.cost_at(*f);
    }
  }
  std::map<std::pair<std::string, int>, std::vector<double>> ratios;
  std::map<std::pair<std::string, int>, RelativeCostRow> rows;
  for (const RunRecord& r : records) {
    for (int delta : checkpoints) {
      auto& row = rows[{r.planner, delta}];
      row.planner = r.planner;
      row.checkpoint = delta;
      const auto base = base_cost.find({r.problem_id, r.seed});
      if (base == base_cost.end()) {
        ++row.missing_baseline;
        continue;
      }
      const auto f = r.first_solution_iteration();
      if (!f || *f + delta > r.iterations) {
        ++row.excluded;
        continue;
      }
      ratios[{r.planner, delta}].push_back(r.cost_at(*f + delta) / base->second);
    }
  }
  std::vector<RelativeCostRow> out;
  for (auto& [key, row] : rows) {
    const SummaryStat s = summarize(ratios[key]);
    row.mean = s.mean;
    row.ci95 = s.ci95;
    row.n = s.n;
    out.push_back(row);
  }
  return out;
}

}  // namespace nirrt

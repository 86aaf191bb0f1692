#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "nirrt/metrics.hpp"

using namespace nirrt;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

RunRecord make_record(std::string planner, std::string problem, std::uint64_t seed,
                      std::vector<TracePoint> trace, int iterations = 3000) {
  RunRecord r;
  r.planner = std::move(planner);
  r.problem_id = std::move(problem);
  r.seed = seed;
  r.iterations = iterations;
  for (const auto& p : trace) r.record_cost(p.iteration, p.cost);
  return r;
}

}  // namespace

TEST(RunRecord, TraceBookkeeping) {
  RunRecord r;
  r.record_cost(0, kInf);
  r.record_cost(1, kInf);
  r.record_cost(5, 120);
  r.record_cost(6, 120);
  r.record_cost(9, 110);
  EXPECT_EQ(r.trace.size(), 3u);
  EXPECT_EQ(r.cost_at(4), kInf);
  EXPECT_EQ(r.cost_at(5), 120);
  EXPECT_EQ(r.cost_at(8), 120);
  EXPECT_EQ(r.cost_at(100), 110);
  EXPECT_EQ(r.first_solution_iteration(), 5);
  EXPECT_THROW(r.record_cost(10, 115), ContractViolation);
}

TEST(RunRecord, JsonRoundTrip) {
  RunRecord r = make_record("irrt-star", "p", 3, {{0, kInf}, {4, 50}, {9, 45}});
  r.events.push_back({4, EventKind::FirstSolution, 50, {}});
  const auto j = run_record_to_json(r, false);
  EXPECT_FALSE(j.contains("wall_time_s"));
  EXPECT_TRUE(run_record_to_json(r).contains("wall_time_s"));
  EXPECT_EQ(trace_from_json(j["trace"]), r.trace);
  EXPECT_TRUE(j["trace"][0][1].is_null());
  EXPECT_EQ(cost_from_json(nlohmann::json(nullptr)), kInf);
  EXPECT_EQ(event_kind_from_string(to_string(EventKind::Retrigger)), EventKind::Retrigger);
}

TEST(ItersToThreshold, Examples) {
  const RunRecord r = make_record("x", "p", 0, {{0, kInf}, {1, 110}, {2, 103}, {3, 101.9}});
  EXPECT_EQ(metric_iters_to_threshold(r, 100, 0.02), 3);
  EXPECT_EQ(metric_iters_to_threshold(r, 100, 0.10), 1);
  EXPECT_FALSE(metric_iters_to_threshold(r, 100, 0.01));
  const RunRecord below = make_record("x", "p", 0, {{0, 100}});
  EXPECT_EQ(metric_iters_to_threshold(below, 100, 0.02), 0);
  EXPECT_EQ(metric_iters_to_threshold(make_record("x", "p", 0, {{0, kInf}, {7, 102}}), 100, 0.02),
            7);
  EXPECT_THROW(metric_iters_to_threshold(r, 0, 0.02), ContractViolation);
}

TEST(ThroughGap, StrictInequality) {
  const RunRecord r = make_record("x", "p", 0, {{0, kInf}, {12, 180}, {40, 150}, {90, 120}});
  EXPECT_EQ(metric_through_gap(r, 150.5), 40);
  EXPECT_EQ(metric_through_gap(r, 150), 90);
  EXPECT_FALSE(metric_through_gap(r, 120));
  EXPECT_FALSE(metric_through_gap(make_record("x", "p", 0, {{0, kInf}}), 1e9));
}

TEST(RelativeCost, HandComputedCorpus) {
  std::vector<RunRecord> rs{
      make_record("rrt-star", "a", 1, {{0, kInf}, {10, 200}, {250, 150}}),
      make_record("irrt-star", "a", 1, {{0, kInf}, {20, 180}, {200, 120}}),
      make_record("rrt-star", "b", 1, {{0, kInf}, {5, 100}}),
      make_record("irrt-star", "b", 1, {{0, kInf}, {8, 90}}),
      make_record("irrt-star", "c", 1, {{0, kInf}, {8, 90}}),
      make_record("nirrt-png-fc", "a", 1, {{0, kInf}}),
  };
  const std::vector<int> checkpoints{0, 250};
  const auto rows = metric_relative_cost(rs, checkpoints);
  auto find = [&](const std::string& planner, int cp) {
    for (const auto& r : rows) {
      if (r.planner == planner && r.checkpoint == cp) return r;
    }
    ADD_FAILURE() << planner << " " << cp;
    return RelativeCostRow{};
  };
  const auto r0 = find("rrt-star", 0);
  EXPECT_EQ(r0.n, 2);
  EXPECT_DOUBLE_EQ(r0.mean, 1.0);
  // rrt a: cost at 260 = 150 -> 0.75; rrt b: 100 -> 1.0
  EXPECT_DOUBLE_EQ(find("rrt-star", 250).mean, (0.75 + 1.0) / 2);
  // irrt a: 180/200 = 0.9, b: 0.9
  EXPECT_DOUBLE_EQ(find("irrt-star", 0).mean, 0.9);
  EXPECT_EQ(find("irrt-star", 0).missing_baseline, 1);
  // irrt a at 270 = 120/200 = 0.6, b at 258 = 0.9
  EXPECT_DOUBLE_EQ(find("irrt-star", 250).mean, 0.75);
  const auto none = find("nirrt-png-fc", 0);
  EXPECT_EQ(none.n, 0);
  EXPECT_EQ(none.excluded, 1);
}

TEST(RelativeCost, CheckpointBeyondBudgetExcluded) {
  std::vector<RunRecord> rs{make_record("rrt-star", "a", 1, {{0, kInf}, {2900, 200}}, 3000)};
  const std::vector<int> cps{0, 250};
  const auto rows = metric_relative_cost(rs, cps);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].n, 1);
  EXPECT_EQ(rows[1].n, 0);
  EXPECT_EQ(rows[1].excluded, 1);
}

TEST(Summarize, MeanCiMedian) {
  const SummaryStat s = summarize({1, 2, 3, 4});
  EXPECT_EQ(s.n, 4);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.median, 2.5);
  EXPECT_NEAR(s.ci95, 1.96 * std::sqrt(5.0 / 3.0) / 2.0, 1e-12);
  EXPECT_EQ(summarize({}).n, 0);
  EXPECT_EQ(summarize({7}).ci95, 0.0);
  const std::vector<std::optional<int>> v{1, std::nullopt, 5, std::nullopt, 2};
  EXPECT_EQ(censored_median(v, 100), 5);
}

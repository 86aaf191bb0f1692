#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nirrt/geometry.hpp"

namespace nirrt {

struct TracePoint {
  int iteration = 0;
  double cost = 0.0;
  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

enum class EventKind { Guidance, Retrigger, FirstSolution, GuidanceUnavailable, GuidanceDegenerate };

std::string to_string(EventKind kind);
EventKind event_kind_from_string(const std::string& s);

struct RunEvent {
  int iteration = 0;
  EventKind kind = EventKind::Guidance;
  double value = 0.0;
  std::string detail;
};

/// One planner run. The cost trace holds only the iterations at which
/// c_best changed; iteration 0 is the state before the loop.
struct RunRecord {
  std::string planner;
  std::string problem_id;
  std::uint64_t seed = 0;
  int iterations = 0;
  std::vector<TracePoint> trace;
  std::vector<RunEvent> events;
  double wall_time_s = 0.0;
  int tree_size = 0;
  std::vector<State> best_path;
  /// Every x_rand in order, only when requested.
  std::vector<State> samples;

  /// Best cost known at the end of `iteration` (+inf before any solution).
  double cost_at(int iteration) const;
  double final_cost() const;
  std::optional<int> first_solution_iteration() const;
  int count(EventKind kind) const;
  void record_cost(int iteration, double cost);
};

nlohmann::json trace_to_json(const std::vector<TracePoint>& trace);
std::vector<TracePoint> trace_from_json(const nlohmann::json& j);
/// Costs are written as numbers, +inf as null.
nlohmann::json cost_to_json(double cost);
double cost_from_json(const nlohmann::json& j);

nlohmann::json run_record_to_json(const RunRecord& record, bool include_timing = true);

}  // namespace nirrt

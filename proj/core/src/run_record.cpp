#include "nirrt/run_record.hpp"

#include <cmath>
#include <limits>

#include "nirrt/world_io.hpp"

namespace nirrt {

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Guidance: return "guidance";
    case EventKind::Retrigger: return "retrigger";
    case EventKind::FirstSolution: return "first-solution";
    case EventKind::GuidanceUnavailable: return "guidance-unavailable";
    case EventKind::GuidanceDegenerate: return "guidance-degenerate";
  }
  return "unknown";
}

EventKind event_kind_from_string(const std::string& s) {
  for (EventKind k : {EventKind::Guidance, EventKind::Retrigger, EventKind::FirstSolution,
                      EventKind::GuidanceUnavailable, EventKind::GuidanceDegenerate}) {
    if (to_string(k) == s) return k;
  }
  throw FormatError("unknown event kind '" + s + "'");
}

double RunRecord::cost_at(int iteration) const {
  double c = std::numeric_limits<double>::infinity();
  for (const TracePoint& p : trace) {
    if (p.iteration > iteration) break;
    c = p.cost;
  }
  return c;
}

double RunRecord::final_cost() const {
  return trace.empty() ? std::numeric_limits<double>::infinity() : trace.back().cost;
}

std::optional<int> RunRecord::first_solution_iteration() const {
  for (const TracePoint& p : trace) {
    if (std::isfinite(p.cost)) return p.iteration;
  }
  return std::nullopt;
}

int RunRecord::count(EventKind kind) const {
  int n = 0;
  for (const RunEvent& e : events) n += e.kind == kind ? 1 : 0;
  return n;
}

void RunRecord::record_cost(int iteration, double cost) {
  if (!trace.empty() && trace.back().cost == cost) return;
  if (!trace.empty() && cost > trace.back().cost) {
    throw ContractViolation("cost trace must be non-increasing");
  }
  trace.push_back({iteration, cost});
}

nlohmann::json cost_to_json(double cost) {
  return std::isfinite(cost) ? nlohmann::json(cost) : nlohmann::json(nullptr);
}

double cost_from_json(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

nlohmann::json trace_to_json(const std::vector<TracePoint>& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TracePoint& p : trace) arr.push_back({p.iteration, cost_to_json(p.cost)});
  return arr;
}

std::vector<TracePoint> trace_from_json(const nlohmann::json& j) {
  std::vector<TracePoint> out;
  for (const auto& p : j) out.push_back({p.at(0).get<int>(), cost_from_json(p.at(1))});
  return out;
}

nlohmann::json run_record_to_json(const RunRecord& r, bool include_timing) {
  nlohmann::json events = nlohmann::json::array();
  for (const RunEvent& e : r.events) {
    nlohmann::json ev{{"iteration", e.iteration}, {"kind", to_string(e.kind)},
                      {"value", cost_to_json(e.value)}};
    if (!e.detail.empty()) ev["detail"] = e.detail;
    events.push_back(ev);
  }
  nlohmann::json path = nlohmann::json::array();
  for (const State& s : r.best_path) path.push_back(state_to_json(s));
  nlohmann::json doc{{"planner", r.planner},
                     {"problem", r.problem_id},
                     {"seed", r.seed},
                     {"iterations", r.iterations},
                     {"final_cost", cost_to_json(r.final_cost())},
                     {"trace", trace_to_json(r.trace)},
                     {"events", events},
                     {"tree_size", r.tree_size},
                     {"path", path}};
  if (const auto f = r.first_solution_iteration()) doc["first_solution"] = *f;
  if (include_timing) doc["wall_time_s"] = r.wall_time_s;
  return doc;
}

}  // namespace nirrt

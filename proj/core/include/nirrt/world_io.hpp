#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "nirrt/world.hpp"

namespace nirrt {

inline constexpr int kWorldFormatVersion = 1;

/// Versioned world document:
///   {"version":1, "dimension":2|3, "bounds":{"lo":[..],"hi":[..]},
///    "clearance":c, "obstacles":[{"type":"box","lo":[..],"hi":[..]} |
///    {"type":"ball","center":[..],"radius":r}], "start":[..], "goal":[..]}
/// plus an optional "meta" object written by the generators.
nlohmann::json problem_to_json(const ProblemInstance& problem);
ProblemInstance problem_from_json(const nlohmann::json& doc);

nlohmann::json state_to_json(const State& s);
State state_from_json(const nlohmann::json& j, int dim);

/// Compact, deterministic serialization (same instance -> same bytes).
std::string dump_problem(const ProblemInstance& problem);
void write_problem_file(const std::filesystem::path& path, const ProblemInstance& problem);
ProblemInstance read_problem_file(const std::filesystem::path& path);

}  // namespace nirrt

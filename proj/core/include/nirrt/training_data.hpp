#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "nirrt/world.hpp"

namespace nirrt {

class Rng;

/// One labelled record: {"world", "points", "labels", "path"}. Points are
/// uniform free samples in world coordinates; a point is labelled 1 when it
/// lies within `eta` of the A* path.
nlohmann::json training_record(const ProblemInstance& problem, int n_points, double eta, Rng& rng);

/// Writes `count` records of `family` worlds as JSON lines, instance k drawn
/// with seed `seed + k`.
void write_training_data(const std::filesystem::path& out, int count, std::uint64_t seed,
                         const std::string& family = "random2d", int n_points = 2048,
                         double eta = 10.0);

}  // namespace nirrt

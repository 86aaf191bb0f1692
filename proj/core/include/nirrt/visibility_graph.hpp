#pragma once

#include <optional>
#include <vector>

#include "nirrt/world.hpp"

namespace nirrt {

struct ShortestPath {
  std::vector<State> waypoints;
  double cost = 0.0;
};

/// Exact Euclidean shortest path in a 2D world made of axis-aligned boxes
/// with zero clearance, via a visibility graph over box corners. Paths may
/// touch box boundaries but never enter a box interior. Throws
/// ContractViolation for 3D worlds, ball obstacles or positive clearance.
std::optional<ShortestPath> visibility_shortest_path(const World& world, const State& start,
                                                     const State& goal);

/// True if the open segment (a, b) avoids every box interior and stays in
/// bounds.
bool segment_visible(const World& world, const State& a, const State& b);

}  // namespace nirrt

#pragma once

#include <array>
#include <string>
#include <string_view>

#include "nirrt/world.hpp"

namespace nirrt {

class Rng;

namespace center_block {
inline constexpr double kStartGoalDistance = 100.0;
inline constexpr std::array<double, 5> kMapWidths{110.0, 130.0, 150.0, 170.0, 190.0};
inline constexpr double kMinBlockHeight = 30.0;
inline constexpr double kMaxBlockHeight = 90.0;
/// Range used when the block width itself is drawn at random.
inline constexpr double kMinBlockWidth = 10.0;
inline constexpr double kMaxBlockWidth = 80.0;
}  // namespace center_block

namespace narrow_passage {
inline constexpr double kWorldSize = 224.0;
inline constexpr double kWallThickness = 10.0;
/// The wall leaves flanking corridors of this width at both ends.
inline constexpr double kCorridor = 24.0;
inline constexpr double kWallLo = kCorridor;
inline constexpr double kWallHi = kWorldSize - kCorridor;
inline constexpr double kStartGoalDistance = 100.0;
inline constexpr std::array<double, 5> kGapHeights{6.0, 8.0, 10.0, 12.0, 14.0};
/// Preferred distance between the gap and the wall ends.
inline constexpr double kGapMargin = 20.0;
}  // namespace narrow_passage

namespace random_world {
inline constexpr double kSize2d = 224.0;
inline constexpr double kClearance2d = 3.0;
inline constexpr double kSize3d = 50.0;
inline constexpr double kClearance3d = 2.0;
inline constexpr int kMaxAttempts = 100;

struct Distribution {
  int min_boxes, max_boxes;
  double min_side, max_side;
  int min_balls, max_balls;
  double min_radius, max_radius;
};
inline constexpr Distribution kDist2d{10, 20, 10.0, 50.0, 5, 10, 5.0, 25.0};
inline constexpr Distribution kDist3d{8, 15, 5.0, 15.0, 4, 8, 3.0, 8.0};
/// Start and goal are at least this fraction of the world side apart.
inline constexpr double kMinSeparationFraction = 0.4;
}  // namespace random_world

/// Square world of side `map_width`, start and goal on the horizontal
/// midline 100 units apart, one box of width `block_width` (no box when 0)
/// and random height centred between them. Zero clearance.
ProblemInstance gen_center_block(double map_width, double block_width, Rng& rng);

/// 224x224 world with a vertical wall between start and goal, pierced by a
/// gap of `gap_height` at a random position; corridors at both wall ends
/// allow a flanking route. Zero clearance.
ProblemInstance gen_narrow_passage(double gap_height, Rng& rng);

/// Random boxes and balls, clearance 3, A*-verified feasible.
ProblemInstance gen_random_world_2d(Rng& rng);
/// 50^3 analogue with clearance 2.
ProblemInstance gen_random_world_3d(Rng& rng);

/// Lower edge of the gap's admissible range for `gap_height`.
std::pair<double, double> narrow_passage_gap_range(double gap_height);

/// A narrow-passage world with the gap filled in; its shortest path is the
/// flanking route.
World close_gap(const ProblemInstance& problem);

/// Known generator family names.
inline constexpr std::array<std::string_view, 4> kFamilies{"center-block", "narrow-passage",
                                                           "random2d", "random3d"};

}  // namespace nirrt

#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "nirrt/informed.hpp"
#include "nirrt/world.hpp"

namespace nirrt {

class Rng;

/// Two independent binary channels; both may be set.
struct PointFeatures {
  bool near_start = false;
  bool near_goal = false;
  friend bool operator==(const PointFeatures&, const PointFeatures&) = default;
};

/// normalized = (x - offset) / scale, with 2D clouds padded to z = 0.
struct Normalization {
  std::array<double, 3> offset{};
  double scale = 1.0;

  std::array<double, 3> apply(const State& x) const;
  State invert(const std::array<double, 3>& p, int dim) const;
};

struct PointCloud {
  int dim = 2;
  std::vector<State> points;
  std::vector<PointFeatures> features;
  std::optional<Normalization> normalization;
  std::vector<std::array<double, 3>> normalized;

  std::size_t size() const { return points.size(); }
};

struct GuidanceSet {
  /// Indices into the cloud the set was inferred from.
  std::vector<std::size_t> indices;
  /// World-frame states.
  std::vector<State> points;
  std::vector<double> probabilities;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
};

/// What a guidance provider sees for one inference call.
struct GuidanceRequest {
  std::span<const std::array<double, 3>> normalized_points;
  std::span<const PointFeatures> features;
  /// Same points in the world frame, for in-process providers.
  std::span<const State> world_points;
  /// Endpoints the one-hot features were computed from.
  State start;
  State goal;
};

/// Maps a featured, normalized cloud to one probability per point. Must be
/// callable from several threads at once. Failures are reported by throwing
/// GuidanceUnavailable.
class GuidanceProvider {
 public:
  virtual ~GuidanceProvider() = default;
  virtual std::vector<double> infer(const GuidanceRequest& request) = 0;
};

struct GuidanceConfig {
  int n_points = 2048;
  int oversample_factor = 4;
  double eta = 10.0;
  int n_guide = 5;
  /// Build the cloud inside the informed set once a solution exists.
  bool focus = true;
  /// Iterate inference with advanced endpoints until BFS-connected.
  bool connect = true;
};

/// Greedy farthest-point selection of `n` indices, starting at index 0.
std::vector<std::size_t> farthest_point_downsample(std::span<const State> candidates,
                                                   std::size_t n);

/// Oversamples `oversample_factor * n` states from free space (intersected
/// with `focus` when given) and keeps `n` by farthest-point selection.
/// Throws DegenerateDomainError if the candidates cannot be drawn.
PointCloud point_cloud_sampling(const World& world, const std::optional<InformedSet>& focus,
                                int n, Rng& rng, int oversample_factor = 4);

PointCloud add_one_hot_features(PointCloud cloud, const State& start, const State& goal,
                                double eta);

/// Centroid-centred, scaled by the largest absolute coordinate so every
/// value lies in [-1, 1]. A zero extent uses scale 1.
PointCloud normalize_coordinates(PointCloud cloud);

/// Calls the provider and keeps points with probability > 0.5.
GuidanceSet infer_guidance(const PointCloud& cloud, GuidanceProvider& provider,
                           const State& start, const State& goal);

struct BfsResult {
  bool connected = false;
  /// Indices into the guide points reached from the source.
  std::vector<std::size_t> visited;
};

/// BFS over {from} + guide + {to} with edges of length <= eta; no collision
/// checks.
BfsResult bfs_connectivity(std::span<const State> guide, const State& from, const State& to,
                           double eta);

/// |b - from| / (|b - from| + |b - to|); 0 when both distances vanish.
double boundary_score(const State& b, const State& from, const State& to);

/// Among the visited guide states that have a non-guide cloud point within
/// eta/2, the one with the highest boundary score (ties: closer to
/// `anchor_to`, then first in order). `in_guide` flags cloud points.
std::optional<State> boundary_next_endpoint(std::span<const State> visited,
                                            const PointCloud& cloud,
                                            const std::vector<bool>& in_guide,
                                            const State& anchor_from, const State& anchor_to,
                                            double eta);

struct GuideRound {
  State start_endpoint;
  State goal_endpoint;
  std::size_t guide_size = 0;
  bool connected = false;
};

struct GuideResult {
  GuidanceSet guide;
  bool connected = false;
  PointCloud cloud;
  bool focused = false;
  /// One entry per inference round, holding the endpoints used for it.
  std::vector<GuideRound> rounds;
};

/// Full guidance pipeline for one problem at the current best cost.
GuideResult pointnet_guide(const ProblemInstance& problem, double c_curr,
                           GuidanceProvider& provider, const GuidanceConfig& cfg, Rng& rng);

}  // namespace nirrt

#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "nirrt/grid_oracle.hpp"
#include "nirrt/guidance.hpp"

namespace nirrt {

/// Labels points within eta of the grid A* path between the request's
/// endpoints (probability 1), everything else 0. Endpoints sitting in a
/// dilated cell snap to the nearest free cell within eta; if that fails or
/// A* finds no path, every probability is 0.
class OracleGuidanceProvider final : public GuidanceProvider {
 public:
  OracleGuidanceProvider(const World& world, double eta, double resolution = 1.0);

  std::vector<double> infer(const GuidanceRequest& request) override;

  const OccupancyGrid& grid() const { return grid_; }
  /// A* path used for the most recent call, if any.
  std::optional<GridPath> last_path() const;

 private:
  std::optional<GridPath> path_between(const State& start, const State& goal);

  OccupancyGrid grid_;
  double eta_;
  mutable std::mutex mutex_;
  std::optional<std::pair<std::size_t, std::size_t>> cached_key_;
  std::optional<GridPath> cached_path_;
};

/// Probabilities from label_guidance over an arbitrary point set.
std::vector<double> oracle_guidance(const ProblemInstance& problem, std::span<const State> points,
                                    double eta);

/// Client for the JSON-over-HTTP inference protocol:
///   POST /infer  {"points": [[x,y,z],...], "features": [[s,g],...]}
///   200          {"probabilities": [p,...]}
/// Anything else (transport error, status, shape) raises GuidanceUnavailable.
class RemoteGuidanceProvider final : public GuidanceProvider {
 public:
  explicit RemoteGuidanceProvider(std::string base_url,
                                  std::chrono::milliseconds timeout = std::chrono::seconds(10));

  std::vector<double> infer(const GuidanceRequest& request) override;
  const std::string& url() const { return url_; }

 private:
  std::string url_;
  std::chrono::milliseconds timeout_;
};

/// Request body for the remote protocol.
std::string encode_infer_request(const GuidanceRequest& request);
/// Parses a response body; throws GuidanceUnavailable on shape errors.
std::vector<double> decode_infer_response(const std::string& body, std::size_t expected);

/// NIRRT_PROVIDER_URL when set, otherwise `fallback`.
std::string provider_url_from_env(const std::string& fallback);

}  // namespace nirrt

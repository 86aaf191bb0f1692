#include "nirrt/providers.hpp"

#include <cmath>
#include <cstdlib>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace nirrt {

OracleGuidanceProvider::OracleGuidanceProvider(const World& world, double eta, double resolution)
    : grid_(rasterize(world, resolution)), eta_(eta) {}

std::optional<GridPath> OracleGuidanceProvider::path_between(const State& start,
                                                             const State& goal) {
  const int snap = static_cast<int>(std::ceil(eta_ * grid_.resolution()));
  const auto s = nearest_free_cell(grid_, start, snap);
  const auto g = nearest_free_cell(grid_, goal, snap);
  std::lock_guard lock(mutex_);
  if (!s || !g) {
    cached_key_.reset();
    cached_path_.reset();
    return std::nullopt;
  }
  const std::pair key{grid_.linear(*s), grid_.linear(*g)};
  if (cached_key_ != key) {
    cached_key_ = key;
    cached_path_ = astar(grid_, *s, *g);
  }
  return cached_path_;
}

std::vector<double> OracleGuidanceProvider::infer(const GuidanceRequest& request) {
  std::vector<double> probs(request.world_points.size(), 0.0);
  const auto path = path_between(request.start, request.goal);
  if (!path) return probs;
  const auto labels = label_guidance(grid_, *path, request.world_points, eta_);
  for (std::size_t i = 0; i < labels.size(); ++i) probs[i] = labels[i] ? 1.0 : 0.0;
  return probs;
}

std::optional<GridPath> OracleGuidanceProvider::last_path() const {
  std::lock_guard lock(mutex_);
  return cached_path_;
}

std::vector<double> oracle_guidance(const ProblemInstance& problem, std::span<const State> points,
                                    double eta) {
  OracleGuidanceProvider oracle(problem.world, eta);
  GuidanceRequest request{{}, {}, points, problem.start, problem.goal};
  return oracle.infer(request);
}

RemoteGuidanceProvider::RemoteGuidanceProvider(std::string base_url,
                                               std::chrono::milliseconds timeout)
    : url_(std::move(base_url)), timeout_(timeout) {
  while (!url_.empty() && url_.back() == '/') url_.pop_back();
  if (url_.empty()) throw ContractViolation("remote provider needs a URL");
}

std::string encode_infer_request(const GuidanceRequest& request) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : request.normalized_points) points.push_back({p[0], p[1], p[2]});
  nlohmann::json features = nlohmann::json::array();
  for (const auto& f : request.features) {
    features.push_back({f.near_start ? 1 : 0, f.near_goal ? 1 : 0});
  }
  return nlohmann::json{{"points", points}, {"features", features}}.dump();
}

std::vector<double> decode_infer_response(const std::string& body, std::size_t expected) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw GuidanceUnavailable(std::string("unparseable provider response: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("probabilities") || !doc["probabilities"].is_array()) {
    throw GuidanceUnavailable("provider response lacks a probabilities array");
  }
  const auto& arr = doc["probabilities"];
  if (arr.size() != expected) {
    throw GuidanceUnavailable("provider returned " + std::to_string(arr.size()) +
                              " probabilities, expected " + std::to_string(expected));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& v : arr) {
    if (!v.is_number()) throw GuidanceUnavailable("non-numeric probability");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<double> RemoteGuidanceProvider::infer(const GuidanceRequest& request) {
  // One client per call keeps concurrent callers independent.
  httplib::Client client(url_);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());
  const auto res = client.Post("/infer", encode_infer_request(request), "application/json");
  if (!res) {
    throw GuidanceUnavailable("provider request to " + url_ +
                              " failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw GuidanceUnavailable("provider returned HTTP " + std::to_string(res->status));
  }
  return decode_infer_response(res->body, request.normalized_points.size());
}

std::string provider_url_from_env(const std::string& fallback) {
  if (const char* env = std::getenv("NIRRT_PROVIDER_URL"); env && *env) return env;
  return fallback;
}

}  // namespace nirrt

#include "nirrt/guidance.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <exception>
#include <limits>

#include "nirrt/rng.hpp"

namespace nirrt {

std::array<double, 3> Normalization::apply(const State& x) const {
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (int i = 0; i < x.dim(); ++i) out[i] = (x[i] - offset[i]) / scale;
  return out;
}

State Normalization::invert(const std::array<double, 3>& p, int dim) const {
  State x(dim);
  for (int i = 0; i < dim; ++i) x[i] = p[i] * scale + offset[i];
  return x;
}

std::vector<std::size_t> farthest_point_downsample(std::span<const State> candidates,
                                                   std::size_t n) {
  if (n > candidates.size()) throw ContractViolation("farthest_point_downsample: n > candidates");
  std::vector<std::size_t> picked;
  if (n == 0) return picked;
  picked.reserve(n);
  std::vector<double> d2(candidates.size(), std::numeric_limits<double>::infinity());
  std::size_t next = 0;
  for (std::size_t k = 0; k < n; ++k) {
    picked.push_back(next);
    const State& p = candidates[next];
    double best = -1.0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const double d = squared_distance(candidates[i], p);
      if (d < d2[i]) d2[i] = d;
      if (d2[i] > best) {
        best = d2[i];
        best_i = i;
      }
    }
    next = best_i;
  }
  return picked;
}

PointCloud point_cloud_sampling(const World& world, const std::optional<InformedSet>& focus,
                                int n, Rng& rng, int oversample_factor) {
  if (n <= 0) throw ContractViolation("point_cloud_sampling: n must be positive");
  if (oversample_factor < 1) throw ContractViolation("point_cloud_sampling: oversample < 1");
  const std::size_t m = static_cast<std::size_t>(n) * static_cast<std::size_t>(oversample_factor);
  std::vector<State> candidates;
  candidates.reserve(m);
  try {
    for (std::size_t i = 0; i < m; ++i) candidates.push_back(informed_or_uniform(focus, world, rng));
  } catch (const InfeasibleSpaceError& e) {
    throw DegenerateDomainError("point_cloud_sampling: only " + std::to_string(candidates.size()) +
                                " of " + std::to_string(m) + " candidates: " + e.what());
  }
  PointCloud cloud;
  cloud.dim = world.dim();
  for (std::size_t i : farthest_point_downsample(candidates, static_cast<std::size_t>(n))) {
    cloud.points.push_back(candidates[i]);
  }
  cloud.features.assign(cloud.points.size(), PointFeatures{});
  return cloud;
}

PointCloud add_one_hot_features(PointCloud cloud, const State& start, const State& goal,
                                double eta) {
  cloud.features.resize(cloud.points.size());
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    cloud.features[i].near_start = distance(cloud.points[i], start) <= eta;
    cloud.features[i].near_goal = distance(cloud.points[i], goal) <= eta;
  }
  return cloud;
}

PointCloud normalize_coordinates(PointCloud cloud) {
  if (cloud.points.empty()) throw ContractViolation("normalize_coordinates: empty cloud");
  Normalization norm;
  for (const State& p : cloud.points) {
    for (int i = 0; i < cloud.dim; ++i) norm.offset[i] += p[i];
  }
  for (int i = 0; i < cloud.dim; ++i) norm.offset[i] /= static_cast<double>(cloud.points.size());
  double extent = 0.0;
  for (const State& p : cloud.points) {
    for (int i = 0; i < cloud.dim; ++i) extent = std::max(extent, std::abs(p[i] - norm.offset[i]));
  }
  norm.scale = extent > 0.0 ? extent : 1.0;
  cloud.normalized.clear();
  cloud.normalized.reserve(cloud.points.size());
  for (const State& p : cloud.points) cloud.normalized.push_back(norm.apply(p));
  cloud.normalization = norm;
  return cloud;
}

GuidanceSet infer_guidance(const PointCloud& cloud, GuidanceProvider& provider,
                           const State& start, const State& goal) {
  if (!cloud.normalization || cloud.normalized.size() != cloud.points.size() ||
      cloud.features.size() != cloud.points.size()) {
    throw ContractViolation("infer_guidance: cloud must be featured and normalized");
  }
  GuidanceRequest request{cloud.normalized, cloud.features, cloud.points, start, goal};
  std::vector<double> probs;
  try {
    probs = provider.infer(request);
  } catch (const GuidanceUnavailable&) {
    throw;
  } catch (const std::exception& e) {
    throw GuidanceUnavailable(std::string("guidance provider failed: ") + e.what());
  }
  if (probs.size() != cloud.points.size()) {
    throw GuidanceUnavailable("guidance provider returned " + std::to_string(probs.size()) +
                              " probabilities for " + std::to_string(cloud.points.size()) +
                              " points");
  }
  GuidanceSet set;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double p = probs[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw GuidanceUnavailable("guidance provider returned a probability outside [0, 1]");
    }
    if (p > 0.5) {
      set.indices.push_back(i);
      set.points.push_back(cloud.points[i]);
      set.probabilities.push_back(p);
    }
  }
  return set;
}

BfsResult bfs_connectivity(std::span<const State> guide, const State& from, const State& to,
                           double eta) {
  BfsResult result;
  const double eta2 = eta * eta;
  if (squared_distance(from, to) <= eta2) result.connected = true;
  std::vector<bool> seen(guide.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < guide.size(); ++i) {
    if (squared_distance(guide[i], from) <= eta2) {
      seen[i] = true;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    result.visited.push_back(u);
    if (squared_distance(guide[u], to) <= eta2) result.connected = true;
    for (std::size_t v = 0; v < guide.size(); ++v) {
      if (!seen[v] && squared_distance(guide[u], guide[v]) <= eta2) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return result;
}

double boundary_score(const State& b, const State& from, const State& to) {
  const double df = distance(b, from);
  const double dt = distance(b, to);
  const double total = df + dt;
  return total > 0.0 ? df / total : 0.0;
}

std::optional<State> boundary_next_endpoint(std::span<const State> visited,
                                            const PointCloud& cloud,
                                            const std::vector<bool>& in_guide,
                                            const State& anchor_from, const State& anchor_to,
                                            double eta) {
  if (in_guide.size() != cloud.points.size()) {
    throw ContractViolation("boundary_next_endpoint: guide mask size mismatch");
  }
  const double r2 = (eta / 2.0) * (eta / 2.0);
  std::optional<State> best;
  double best_score = -1.0;
  double best_to = std::numeric_limits<double>::infinity();
  for (const State& b : visited) {
    bool on_boundary = false;
    for (std::size_t i = 0; i < cloud.points.size() && !on_boundary; ++i) {
      on_boundary = !in_guide[i] && squared_distance(b, cloud.points[i]) <= r2;
    }
    if (!on_boundary) continue;
    const double score = boundary_score(b, anchor_from, anchor_to);
    const double to = distance(b, anchor_to);
    if (score > best_score || (score == best_score && to < best_to)) {
      best_score = score;
      best_to = to;
      best = b;
    }
  }
  return best;
}

namespace {

GuidanceSet collect(const PointCloud& cloud, const std::vector<bool>& in_guide,
                    const std::vector<double>& prob) {
  GuidanceSet set;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    if (!in_guide[i]) continue;
    set.indices.push_back(i);
    set.points.push_back(cloud.points[i]);
    set.probabilities.push_back(prob[i]);
  }
  return set;
}

}  // namespace

GuideResult pointnet_guide(const ProblemInstance& problem, double c_curr,
                           GuidanceProvider& provider, const GuidanceConfig& cfg, Rng& rng) {
  GuideResult result;
  std::optional<InformedSet> focus;
  if (cfg.focus && std::isfinite(c_curr)) {
    const double c_min = distance(problem.start, problem.goal);
    focus.emplace(problem.start, problem.goal, std::max(c_curr, c_min));
    result.focused = true;
  }
  result.cloud =
      point_cloud_sampling(problem.world, focus, cfg.n_points, rng, cfg.oversample_factor);
  const PointCloud& cloud = result.cloud;

  std::vector<bool> in_guide(cloud.size(), false);
  std::vector<double> prob(cloud.size(), 0.0);
  State x_start = problem.start;
  State x_goal = problem.goal;
  const int rounds = cfg.connect ? cfg.n_guide : 1;

  for (int j = 0; j < rounds; ++j) {
    PointCloud input = normalize_coordinates(add_one_hot_features(cloud, x_start, x_goal, cfg.eta));
    const GuidanceSet inferred = infer_guidance(input, provider, x_start, x_goal);
    for (std::size_t k = 0; k < inferred.size(); ++k) {
      const std::size_t i = inferred.indices[k];
      in_guide[i] = true;
      prob[i] = std::max(prob[i], inferred.probabilities[k]);
    }
    GuideRound round{x_start, x_goal, 0, false};

    std::vector<State> guide_points;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      if (in_guide[i]) guide_points.push_back(cloud.points[i]);
    }
    round.guide_size = guide_points.size();

    const BfsResult forward = bfs_connectivity(guide_points, problem.start, problem.goal, cfg.eta);
    if (forward.connected || !cfg.connect) {
      round.connected = forward.connected;
      result.connected = forward.connected;
      result.rounds.push_back(round);
      break;
    }
    auto visited_points = [&](const BfsResult& bfs) {
      std::vector<State> out;
      out.reserve(bfs.visited.size());
      for (std::size_t i : bfs.visited) out.push_back(guide_points[i]);
      return out;
    };
    if (auto next = boundary_next_endpoint(visited_points(forward), cloud, in_guide,
                                           problem.start, problem.goal, cfg.eta)) {
      x_start = *next;
    }
    const BfsResult backward =
        bfs_connectivity(guide_points, problem.goal, problem.start, cfg.eta);
    if (backward.connected) {
      round.connected = true;
      result.connected = true;
      result.rounds.push_back(round);
      break;
    }
    if (auto next = boundary_next_endpoint(visited_points(backward), cloud, in_guide,
                                           problem.goal, problem.start, cfg.eta)) {
      x_goal = *next;
    }
    result.rounds.push_back(round);
  }
  result.guide = collect(cloud, in_guide, prob);
  return result;
}

}  // namespace nirrt

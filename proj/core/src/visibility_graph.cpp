#include "nirrt/visibility_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace nirrt {

namespace {

constexpr double kEps = 1e-9;

// Liang-Barsky clip of a->b against the open box; true if a piece of
// positive length lies strictly inside.
bool crosses_box_interior(const Box& box, const State& a, const State& b) {
  double t0 = 0.0;
  double t1 = 1.0;
  for (int i = 0; i < 2; ++i) {
    const double d = b[i] - a[i];
    const double lo = box.lo[i] + kEps;
    const double hi = box.hi[i] - kEps;
    if (std::abs(d) < 1e-15) {
      if (a[i] <= lo || a[i] >= hi) return false;
      continue;
    }
    double ta = (lo - a[i]) / d;
    double tb = (hi - a[i]) / d;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 >= t1) return false;
  }
  return t1 - t0 > kEps;
}

void require_supported(const World& world) {
  if (world.dim() != 2) throw ContractViolation("visibility graph supports 2D worlds only");
  if (world.clearance() != 0.0) {
    throw ContractViolation("visibility graph requires zero clearance");
  }
  for (const Obstacle& o : world.obstacles()) {
    if (!o.is_box()) throw ContractViolation("visibility graph supports box obstacles only");
  }
}

}  // namespace

bool segment_visible(const World& world, const State& a, const State& b) {
  if (!world.in_bounds(a) || !world.in_bounds(b)) return false;
  for (const Obstacle& o : world.obstacles()) {
    if (crosses_box_interior(o.as_box(), a, b)) return false;
  }
  return true;
}

std::optional<ShortestPath> visibility_shortest_path(const World& world, const State& start,
                                                     const State& goal) {
  require_supported(world);
  require_same_dim(start, goal);
  std::vector<State> nodes{start, goal};
  for (const Obstacle& o : world.obstacles()) {
    const Box& b = o.as_box();
    for (const State& corner : {State{b.lo[0], b.lo[1]}, State{b.hi[0], b.lo[1]},
                                State{b.lo[0], b.hi[1]}, State{b.hi[0], b.hi[1]}}) {
      if (!world.in_bounds(corner)) continue;
      // Corners buried inside another box are never on a shortest path.
      const bool buried = std::any_of(world.obstacles().begin(), world.obstacles().end(),
                                      [&](const Obstacle& other) { return other.contains(corner); });
      if (!buried) nodes.push_back(corner);
    }
  }

  const std::size_t n = nodes.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf);
  std::vector<std::ptrdiff_t> parent(n, -1);
  std::vector<bool> done(n, false);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = 0.0;
  pq.emplace(0.0, 0);
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = true;
    if (u == 1) break;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v] || v == u) continue;
      const double nd = d + distance(nodes[u], nodes[v]);
      if (nd < dist[v] && segment_visible(world, nodes[u], nodes[v])) {
        dist[v] = nd;
        parent[v] = static_cast<std::ptrdiff_t>(u);
        pq.emplace(nd, v);
      }
    }
  }
  if (!done[1]) return std::nullopt;
  ShortestPath path;
  path.cost = dist[1];
  for (std::ptrdiff_t v = 1; v >= 0; v = parent[static_cast<std::size_t>(v)]) {
    path.waypoints.push_back(nodes[static_cast<std::size_t>(v)]);
  }
  std::reverse(path.waypoints.begin(), path.waypoints.end());
  return path;
}

}  // namespace nirrt

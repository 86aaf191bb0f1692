#include "nirrt/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <tuple>

namespace nirrt {

OccupancyGrid::OccupancyGrid(int dim, State origin, double resolution, Cell dims)
    : dim_(dim), origin_(std::move(origin)), resolution_(resolution), dims_(dims) {
  require_supported_dim(dim);
  if (!(resolution > 0.0)) throw ContractViolation("grid resolution must be > 0");
  if (dim == 2) dims_[2] = 1;
  for (int a = 0; a < 3; ++a) {
    if (dims_[a] <= 0) throw ContractViolation("grid dims must be positive");
  }
  occupied_.assign(static_cast<std::size_t>(dims_[0]) * dims_[1] * dims_[2], 0);
}

bool OccupancyGrid::in_grid(const Cell& c) const {
  for (int a = 0; a < 3; ++a) {
    if (c[a] < 0 || c[a] >= dims_[a]) return false;
  }
  return true;
}

std::size_t OccupancyGrid::linear(const Cell& c) const {
  return (static_cast<std::size_t>(c[2]) * dims_[1] + c[1]) * dims_[0] + c[0];
}

Cell OccupancyGrid::unlinear(std::size_t idx) const {
  Cell c{};
  c[0] = static_cast<int>(idx % dims_[0]);
  idx /= dims_[0];
  c[1] = static_cast<int>(idx % dims_[1]);
  c[2] = static_cast<int>(idx / dims_[1]);
  return c;
}

State OccupancyGrid::center(const Cell& c) const {
  State s(dim_);
  for (int a = 0; a < dim_; ++a) s[a] = origin_[a] + (c[a] + 0.5) / resolution_;
  return s;
}

std::optional<Cell> OccupancyGrid::cell_of(const State& x) const {
  require_same_dim(origin_, x);
  Cell c{0, 0, 0};
  for (int a = 0; a < dim_; ++a) {
    const double f = std::floor((x[a] - origin_[a]) * resolution_);
    if (!std::isfinite(f)) return std::nullopt;
    c[a] = static_cast<int>(f);
    // The far bound belongs to the last cell.
    if (c[a] == dims_[a] && x[a] - origin_[a] <= dims_[a] / resolution_) c[a] = dims_[a] - 1;
  }
  if (!in_grid(c)) return std::nullopt;
  return c;
}

std::size_t OccupancyGrid::occupied_count() const {
  return static_cast<std::size_t>(std::count(occupied_.begin(), occupied_.end(), 1));
}

namespace {

std::vector<Cell> neighbour_offsets(int dim) {
  std::vector<Cell> out;
  const int kz = dim == 3 ? 1 : 0;
  for (int dz = -kz; dz <= kz; ++dz) {
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0 && dz == 0) continue;
        out.push_back({dx, dy, dz});
      }
    }
  }
  return out;
}

std::vector<Cell> dilation_offsets(int dim, int r) {
  std::vector<Cell> out;
  const int rz = dim == 3 ? r : 0;
  for (int dz = -rz; dz <= rz; ++dz) {
    for (int dy = -r; dy <= r; ++dy) {
      for (int dx = -r; dx <= r; ++dx) {
        if (dim == 3 && dx * dx + dy * dy + dz * dz > r * r) continue;
        out.push_back({dx, dy, dz});
      }
    }
  }
  return out;
}

}  // namespace

OccupancyGrid rasterize(const World& world, double resolution) {
  const Box& b = world.bounds();
  Cell dims{1, 1, 1};
  for (int a = 0; a < world.dim(); ++a) {
    dims[a] = static_cast<int>(std::ceil((b.hi[a] - b.lo[a]) * resolution - 1e-9));
  }
  OccupancyGrid grid(world.dim(), b.lo, resolution, dims);

  std::vector<std::uint8_t> raw(grid.size(), 0);
  for (const Obstacle& o : world.obstacles()) {
    // Only visit cells overlapping the obstacle's bounding box.
    const Box box = o.aabb();
    Cell lo{0, 0, 0};
    Cell hi{0, 0, 0};
    for (int a = 0; a < world.dim(); ++a) {
      lo[a] = std::max(0, static_cast<int>(std::floor((box.lo[a] - b.lo[a]) * resolution)) - 1);
      hi[a] = std::min(dims[a] - 1,
                       static_cast<int>(std::ceil((box.hi[a] - b.lo[a]) * resolution)) + 1);
    }
    for (int k = lo[2]; k <= hi[2]; ++k) {
      for (int j = lo[1]; j <= hi[1]; ++j) {
        for (int i = lo[0]; i <= hi[0]; ++i) {
          const Cell c{i, j, k};
          if (o.contains_closed(grid.center(c))) raw[grid.linear(c)] = 1;
        }
      }
    }
  }

  const int r = static_cast<int>(std::lround(world.clearance() * resolution));
  grid.dilation_radius_ = r;
  if (r == 0) {
    grid.occupied_ = std::move(raw);
    return grid;
  }
  const std::vector<Cell> offsets = dilation_offsets(world.dim(), r);
  for (std::size_t idx = 0; idx < raw.size(); ++idx) {
    if (!raw[idx]) continue;
    const Cell c = grid.unlinear(idx);
    for (const Cell& o : offsets) {
      const Cell n{c[0] + o[0], c[1] + o[1], c[2] + o[2]};
      if (grid.in_grid(n)) grid.set_occupied(n, true);
    }
  }
  return grid;
}

double step_count_cost(const std::array<int, 3>& counts) {
  return counts[0] + counts[1] * std::numbers::sqrt2 + counts[2] * std::numbers::sqrt3;
}

namespace {

double cell_distance(const Cell& a, const Cell& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace

std::optional<GridPath> astar(const OccupancyGrid& grid, const Cell& start, const Cell& goal) {
  if (!grid.in_grid(start) || !grid.in_grid(goal)) {
    throw ContractViolation("astar: endpoint outside grid");
  }
  if (grid.occupied(start) || grid.occupied(goal)) {
    throw ContractViolation("astar: start or goal cell is occupied");
  }
  const double inv_res = 1.0 / grid.resolution();
  if (start == goal) return GridPath{{start}, 0.0};

  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t n = grid.size();
  std::vector<double> g(n, kInf);
  std::vector<std::array<int, 3>> counts(n, {0, 0, 0});
  std::vector<std::int64_t> parent(n, -1);
  std::vector<std::uint8_t> closed(n, 0);

  // (f, h, linear index), smallest first.
  using Key = std::tuple<double, double, std::size_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> open;

  const std::size_t s = grid.linear(start);
  const std::size_t t = grid.linear(goal);
  g[s] = 0.0;
  const double h0 = cell_distance(start, goal);
  open.emplace(h0, h0, s);

  const std::vector<Cell> offsets = neighbour_offsets(grid.dim());
  while (!open.empty()) {
    const auto [f, h, u] = open.top();
    open.pop();
    if (closed[u]) continue;
    closed[u] = 1;
    if (u == t) break;
    const Cell cu = grid.unlinear(u);
    for (const Cell& o : offsets) {
      const Cell cv{cu[0] + o[0], cu[1] + o[1], cu[2] + o[2]};
      if (!grid.in_grid(cv) || grid.occupied(cv)) continue;
      const std::size_t v = grid.linear(cv);
      const int kind = std::abs(o[0]) + std::abs(o[1]) + std::abs(o[2]) - 1;
      std::array<int, 3> c = counts[u];
      ++c[kind];
      const double gv = step_count_cost(c);
      if (gv < g[v]) {
        g[v] = gv;
        counts[v] = c;
        parent[v] = static_cast<std::int64_t>(u);
        closed[v] = 0;
        const double hv = cell_distance(cv, goal);
        open.emplace(gv + hv, hv, v);
      }
    }
  }
  if (!closed[t]) return std::nullopt;

  GridPath path;
  for (std::int64_t v = static_cast<std::int64_t>(t); v >= 0; v = parent[v]) {
    path.cells.push_back(grid.unlinear(static_cast<std::size_t>(v)));
  }
  std::reverse(path.cells.begin(), path.cells.end());
  path.cost = g[t] * inv_res;
  return path;
}

std::optional<GridPath> astar(const OccupancyGrid& grid, const State& start, const State& goal) {
  const auto s = grid.cell_of(start);
  const auto t = grid.cell_of(goal);
  if (!s || !t) throw ContractViolation("astar: endpoint outside grid");
  return astar(grid, *s, *t);
}

std::optional<Cell> nearest_free_cell(const OccupancyGrid& grid, const State& x,
                                      int max_radius_cells) {
  const auto home = grid.cell_of(x);
  if (!home) return std::nullopt;
  if (!grid.occupied(*home)) return home;
  std::optional<Cell> best;
  double best_d = std::numeric_limits<double>::infinity();
  const int r = max_radius_cells;
  const int rz = grid.dim() == 3 ? r : 0;
  for (int dz = -rz; dz <= rz; ++dz) {
    for (int dy = -r; dy <= r; ++dy) {
      for (int dx = -r; dx <= r; ++dx) {
        const Cell c{(*home)[0] + dx, (*home)[1] + dy, (*home)[2] + dz};
        if (!grid.in_grid(c) || grid.occupied(c)) continue;
        const double d = squared_distance(grid.center(c), x);
        if (d < best_d || (d == best_d && grid.linear(c) < grid.linear(*best))) {
          best_d = d;
          best = c;
        }
      }
    }
  }
  return best;
}

std::vector<State> path_states(const OccupancyGrid& grid, const GridPath& path) {
  std::vector<State> out;
  out.reserve(path.cells.size());
  for (const Cell& c : path.cells) out.push_back(grid.center(c));
  return out;
}

std::vector<bool> label_guidance(const OccupancyGrid& grid, const GridPath& path,
                                 std::span<const State> points, double eta) {
  if (path.cells.empty()) throw ContractViolation("label_guidance: empty path");
  const std::vector<State> centers = path_states(grid, path);
  const double eta2 = eta * eta;
  std::vector<bool> labels(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const State& c : centers) {
      if (squared_distance(points[i], c) <= eta2) {
        labels[i] = true;
        break;
      }
    }
  }
  return labels;
}

}  // namespace nirrt

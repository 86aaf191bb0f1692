#include "nirrt/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nirrt {

namespace {
// Below this many vertices a linear scan beats walking bucket rings.
constexpr int kLinearScanLimit = 64;
}  // namespace

BucketIndex::BucketIndex(double cell_size) : cell_size_(cell_size) {
  if (!(cell_size > 0.0)) throw ContractViolation("bucket cell size must be > 0");
}

std::array<std::int64_t, 3> BucketIndex::cell_of(const State& x) const {
  std::array<std::int64_t, 3> c{0, 0, 0};
  for (int i = 0; i < x.dim(); ++i) {
    c[i] = static_cast<std::int64_t>(std::floor(x[i] / cell_size_));
  }
  return c;
}

BucketIndex::Key BucketIndex::key(const std::array<std::int64_t, 3>& c) {
  constexpr std::int64_t kOffset = 1 << 20;
  return ((c[0] + kOffset) << 42) ^ ((c[1] + kOffset) << 21) ^ (c[2] + kOffset);
}

void BucketIndex::insert(const State& x, int id) {
  const auto c = cell_of(x);
  buckets_[key(c)].push_back(id);
  if (count_ == 0) {
    min_cell_ = max_cell_ = c;
  } else {
    for (int i = 0; i < 3; ++i) {
      min_cell_[i] = std::min(min_cell_[i], c[i]);
      max_cell_[i] = std::max(max_cell_[i], c[i]);
    }
  }
  ++count_;
}

std::int64_t BucketIndex::max_ring(const std::array<std::int64_t, 3>& c, int dim) const {
  std::int64_t r = 0;
  for (int i = 0; i < dim; ++i) {
    r = std::max({r, c[i] - min_cell_[i], max_cell_[i] - c[i]});
  }
  return r;
}

template <typename Fn>
void BucketIndex::for_cells_in_ring(const std::array<std::int64_t, 3>& center, std::int64_t ring,
                                    int dim, Fn&& fn) const {
  const std::int64_t rz = dim == 3 ? ring : 0;
  for (std::int64_t dz = -rz; dz <= rz; ++dz) {
    for (std::int64_t dy = -ring; dy <= ring; ++dy) {
      const bool inner_yz = std::abs(dz) < ring && std::abs(dy) < ring;
      // Interior rows only contribute their two end cells.
      const std::int64_t step = (inner_yz && ring > 0) ? 2 * ring : 1;
      for (std::int64_t dx = -ring; dx <= ring; dx += step) {
        const auto it = buckets_.find(key({center[0] + dx, center[1] + dy, center[2] + dz}));
        if (it != buckets_.end()) fn(it->second);
      }
    }
  }
}

int BucketIndex::nearest(const std::vector<State>& points, const State& x) const {
  if (count_ == 0) throw ContractViolation("nearest on an empty index");
  int best = -1;
  double best_d2 = std::numeric_limits<double>::infinity();
  auto consider = [&](int id) {
    const double d2 = squared_distance(points[static_cast<std::size_t>(id)], x);
    if (d2 < best_d2 || (d2 == best_d2 && id < best)) {
      best_d2 = d2;
      best = id;
    }
  };
  if (count_ < kLinearScanLimit) {
    for (int id = 0; id < count_; ++id) consider(id);
    return best;
  }
  const int dim = x.dim();
  const auto c = cell_of(x);
  const std::int64_t rings = max_ring(c, dim);
  for (std::int64_t k = 0; k <= rings; ++k) {
    if (best >= 0) {
      // Every point in ring k is at least (k-1) cells away.
      const double lower = static_cast<double>(k - 1) * cell_size_;
      if (lower > 0.0 && lower * lower > best_d2) break;
    }
    for_cells_in_ring(c, k, dim, [&](const std::vector<int>& ids) {
      for (int id : ids) consider(id);
    });
  }
  return best;
}

std::vector<int> BucketIndex::within(const std::vector<State>& points, const State& x,
                                     double radius) const {
  std::vector<int> out;
  if (count_ == 0) return out;
  const double r2 = radius * radius;
  if (count_ < kLinearScanLimit) {
    for (int id = 0; id < count_; ++id) {
      if (squared_distance(points[static_cast<std::size_t>(id)], x) <= r2) out.push_back(id);
    }
    return out;
  }
  const int dim = x.dim();
  const auto c = cell_of(x);
  const std::int64_t reach =
      std::min(max_ring(c, dim), static_cast<std::int64_t>(std::ceil(radius / cell_size_)));
  for (std::int64_t k = 0; k <= reach; ++k) {
    for_cells_in_ring(c, k, dim, [&](const std::vector<int>& ids) {
      for (int id : ids) {
        if (squared_distance(points[static_cast<std::size_t>(id)], x) <= r2) out.push_back(id);
      }
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

Tree::Tree(State root, double index_cell_size) : index_(index_cell_size) {
  require_supported_dim(root.dim());
  vertices_.push_back(root);
  parent_.push_back(kNoParent);
  cost_.push_back(0.0);
  children_.emplace_back();
  index_.insert(root, 0);
}

int Tree::add_vertex(const State& x, int parent) {
  if (parent < 0 || parent >= size()) throw ContractViolation("add_vertex: bad parent");
  require_same_dim(vertices_.front(), x);
  const int id = size();
  vertices_.push_back(x);
  parent_.push_back(parent);
  cost_.push_back(cost(parent) + distance(vertex(parent), x));
  children_.emplace_back();
  children_[static_cast<std::size_t>(parent)].push_back(id);
  index_.insert(x, id);
  return id;
}

void Tree::set_parent(int v, int new_parent) {
  if (v <= 0 || v >= size() || new_parent < 0 || new_parent >= size() || v == new_parent) {
    throw ContractViolation("set_parent: bad vertex");
  }
  auto& old_children = children_[static_cast<std::size_t>(parent(v))];
  old_children.erase(std::find(old_children.begin(), old_children.end(), v));
  parent_[static_cast<std::size_t>(v)] = new_parent;
  children_[static_cast<std::size_t>(new_parent)].push_back(v);

  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    const int p = parent(u);
    cost_[static_cast<std::size_t>(u)] = cost(p) + distance(vertex(p), vertex(u));
    for (int c : children(u)) stack.push_back(c);
  }
}

int Tree::nearest(const State& x) const {
  require_same_dim(vertices_.front(), x);
  return index_.nearest(vertices_, x);
}

std::vector<int> Tree::near(const State& x, double radius) const {
  require_same_dim(vertices_.front(), x);
  if (radius < 0.0) throw ContractViolation("near: negative radius");
  return index_.within(vertices_, x, radius);
}

std::vector<State> Tree::path_to(int v) const {
  std::vector<State> out;
  for (int u = v; u != kNoParent; u = parent(u)) out.push_back(vertex(u));
  std::reverse(out.begin(), out.end());
  return out;
}

State steer(const State& from, const State& to, double eta) {
  if (!(eta > 0.0)) throw ContractViolation("steer: eta must be > 0");
  const double d = distance(from, to);
  if (d <= eta) return to;
  return from + (to - from) * (eta / d);
}

}  // namespace nirrt

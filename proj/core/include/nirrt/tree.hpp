#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nirrt/geometry.hpp"

namespace nirrt {

/// Incremental uniform-bucket index over tree vertices. Queries return the
/// same answers as a linear scan (including lowest-index tie breaking).
class BucketIndex {
 public:
  explicit BucketIndex(double cell_size);

  void insert(const State& x, int id);
  /// Nearest id among `points` (the same array that was inserted).
  int nearest(const std::vector<State>& points, const State& x) const;
  /// Sorted ids with squared_distance(point, x) <= radius^2.
  std::vector<int> within(const std::vector<State>& points, const State& x, double radius) const;

 private:
  using Key = std::int64_t;
  std::array<std::int64_t, 3> cell_of(const State& x) const;
  static Key key(const std::array<std::int64_t, 3>& c);
  template <typename Fn>
  void for_cells_in_ring(const std::array<std::int64_t, 3>& center, std::int64_t ring, int dim,
                         Fn&& fn) const;
  std::int64_t max_ring(const std::array<std::int64_t, 3>& c, int dim) const;

  double cell_size_;
  std::unordered_map<Key, std::vector<int>> buckets_;
  std::array<std::int64_t, 3> min_cell_{};
  std::array<std::int64_t, 3> max_cell_{};
  int count_ = 0;
};

/// RRT* search tree: vertices, parent links and cost-to-come. Maintains
/// cost(v) == cost(parent(v)) + distance(parent(v), v) for every non-root v.
class Tree {
 public:
  static constexpr int kNoParent = -1;

  explicit Tree(State root, double index_cell_size = 10.0);

  int size() const { return static_cast<int>(vertices_.size()); }
  int dim() const { return vertices_.front().dim(); }
  const State& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const std::vector<State>& vertices() const { return vertices_; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  double cost(int v) const { return cost_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }

  int add_vertex(const State& x, int parent);
  /// Re-parents v and refreshes the cost of its whole subtree.
  void set_parent(int v, int new_parent);

  /// Vertex closest to x; ties go to the lowest index.
  int nearest(const State& x) const;
  /// All vertices within `radius` of x, ascending.
  std::vector<int> near(const State& x, double radius) const;

  /// Root-to-v vertex sequence.
  std::vector<State> path_to(int v) const;

 private:
  std::vector<State> vertices_;
  std::vector<int> parent_;
  std::vector<double> cost_;
  std::vector<std::vector<int>> children_;
  BucketIndex index_;
};

/// Moves from `from` toward `to` by at most `eta`.
State steer(const State& from, const State& to, double eta);

}  // namespace nirrt

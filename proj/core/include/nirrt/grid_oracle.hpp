#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nirrt/world.hpp"

namespace nirrt {

using Cell = std::array<int, 3>;

/// Occupancy raster of a World after clearance dilation. Cell (i, j, k)
/// covers [lo + i/res, lo + (i+1)/res) on each axis; 2D grids use k = 0.
class OccupancyGrid {
 public:
  OccupancyGrid(int dim, State origin, double resolution, Cell dims);

  int dim() const { return dim_; }
  const Cell& dims() const { return dims_; }
  double resolution() const { return resolution_; }
  const State& origin() const { return origin_; }
  std::size_t size() const { return occupied_.size(); }
  int dilation_radius() const { return dilation_radius_; }

  bool in_grid(const Cell& c) const;
  bool occupied(const Cell& c) const { return occupied_[linear(c)] != 0; }
  void set_occupied(const Cell& c, bool v) { occupied_[linear(c)] = v ? 1 : 0; }
  std::size_t linear(const Cell& c) const;
  Cell unlinear(std::size_t idx) const;
  State center(const Cell& c) const;
  /// Cell containing x, if x lies on the grid.
  std::optional<Cell> cell_of(const State& x) const;
  std::size_t occupied_count() const;

 private:
  friend OccupancyGrid rasterize(const World& world, double resolution);
  int dim_;
  State origin_;
  double resolution_;
  Cell dims_;
  int dilation_radius_ = 0;
  std::vector<std::uint8_t> occupied_;
};

/// Marks cells whose center lies in an obstacle, then dilates by
/// round(clearance * resolution) cells: a square (Chebyshev) neighbourhood in
/// 2D, a Euclidean ball in 3D.
OccupancyGrid rasterize(const World& world, double resolution = 1.0);

struct GridPath {
  std::vector<Cell> cells;
  /// Euclidean length in world units.
  double cost = 0.0;
};

/// Cost of a path made of `counts[0]` axis steps, `counts[1]` face-diagonal
/// steps and `counts[2]` cube-diagonal steps, in cell units. Evaluating from
/// counts keeps costs independent of step order.
double step_count_cost(const std::array<int, 3>& counts);

/// 8-connected (2D) / 26-connected (3D) A* with Euclidean step costs and a
/// Euclidean heuristic. Ties break on lower heuristic, then lower linear cell
/// index. Throws ContractViolation if an endpoint cell is occupied.
std::optional<GridPath> astar(const OccupancyGrid& grid, const Cell& start, const Cell& goal);
std::optional<GridPath> astar(const OccupancyGrid& grid, const State& start, const State& goal);

/// Free cell closest (Euclidean, then linear index) to x within
/// `max_radius_cells`, searching outward from x's own cell.
std::optional<Cell> nearest_free_cell(const OccupancyGrid& grid, const State& x,
                                      int max_radius_cells);

std::vector<State> path_states(const OccupancyGrid& grid, const GridPath& path);

/// True for points within `eta` of some path cell center.
std::vector<bool> label_guidance(const OccupancyGrid& grid, const GridPath& path,
                                 std::span<const State> points, double eta);

}  // namespace nirrt

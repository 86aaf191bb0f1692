#include "nirrt/training_data.hpp"

#include <fstream>

#include "nirrt/bench.hpp"
#include "nirrt/errors.hpp"
#include "nirrt/grid_oracle.hpp"
#include "nirrt/guidance.hpp"
#include "nirrt/rng.hpp"
#include "nirrt/world_io.hpp"

namespace nirrt {

using nlohmann::json;

nlohmann::json training_record(const ProblemInstance& problem, int n_points, double eta,
                               Rng& rng) {
  if (n_points <= 0) throw ContractViolation("training_record: n_points must be positive");
  const OccupancyGrid grid = rasterize(problem.world);
  const std::optional<GridPath> path = astar(grid, problem.start, problem.goal);
  if (!path) throw GenerationError("training_record: no grid path between start and goal");
  const PointCloud cloud = point_cloud_sampling(problem.world, std::nullopt, n_points, rng);
  const std::vector<bool> labels = label_guidance(grid, *path, cloud.points, eta);

  json points = json::array();
  for (const State& p : cloud.points) points.push_back(state_to_json(p));
  json label_array = json::array();
  for (bool b : labels) label_array.push_back(b ? 1 : 0);
  json path_array = json::array();
  for (const State& p : path_states(grid, *path)) path_array.push_back(state_to_json(p));
  return json{{"world", problem_to_json(problem)},
              {"points", std::move(points)},
              {"labels", std::move(label_array)},
              {"path", std::move(path_array)}};
}

void write_training_data(const std::filesystem::path& out, int count, std::uint64_t seed,
                         const std::string& family, int n_points, double eta) {
  if (count < 0) throw ContractViolation("write_training_data: negative count");
  if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
  std::ofstream os(out, std::ios::trunc);
  if (!os) throw FormatError("cannot write " + out.string());
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    const ProblemInstance problem = generate_instance(family, k, s);
    Rng rng = Rng(s).fork(7);
    os << training_record(problem, n_points, eta, rng).dump() << '\n';
  }
}

}  // namespace nirrt

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nirrt/planner.hpp"
#include "nirrt/world.hpp"

namespace nirrt {

/// A corpus instance plus the reference costs the metrics need.
struct CorpusEntry {
  std::string id;
  ProblemInstance problem;
  /// Exact optimum (2D zero-clearance box worlds only).
  std::optional<double> c_opt;
  /// Narrow passage: optimum with the gap closed.
  std::optional<double> flank_cost;
};

CorpusEntry make_corpus_entry(std::string id, ProblemInstance problem);
/// Every *.json world in `dir`, sorted by file stem.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

/// Writes `count` instances of `family` named <family>_<seed>.json, instance
/// k using seed `seed + k`. Returns the written paths.
std::vector<std::filesystem::path> generate_corpus(const std::string& family, int count,
                                                   std::uint64_t seed,
                                                   const std::filesystem::path& out_dir);

/// One generated instance; `index` picks map width / gap height cyclically.
ProblemInstance generate_instance(const std::string& family, int index, std::uint64_t seed);

/// "oracle" or "remote:URL" (NIRRT_PROVIDER_URL overrides the URL).
std::unique_ptr<GuidanceProvider> make_provider(const std::string& spec,
                                                const ProblemInstance& problem, double eta);

struct BenchConfig {
  std::vector<PlannerKind> planners;
  int seeds = 1;
  std::uint64_t base_seed = 0;
  /// Overrides the 3000 (2D) / 5000 (3D) defaults.
  std::optional<int> iterations;
  double alpha = 0.9;
  std::string provider = "oracle";
  /// Worker threads; 0 picks hardware concurrency.
  int threads = 0;
  std::vector<double> tolerances{0.02, 0.04, 0.06, 0.08, 0.10};
  std::vector<int> checkpoints{0, 250, 500, 1000, 1500};
};

struct BenchStats {
  int total = 0;
  int run = 0;
  int skipped = 0;
  int failed = 0;
};

/// Seed shared by every planner for one (problem, seed index) cell.
std::uint64_t cell_seed(const std::string& problem_id, int seed_index, std::uint64_t base_seed);

/// Runs one planner on one corpus entry and returns its results line.
nlohmann::json run_cell(const CorpusEntry& entry, PlannerKind planner, int seed_index,
                        const BenchConfig& cfg, double* wall_time_s = nullptr);

/// Runs every (problem x planner x seed) cell not already present in
/// out_dir/results.jsonl, then rewrites results.jsonl in canonical order and
/// writes summary.csv. Wall times go to timings.csv so the other two files
/// are reproducible byte for byte.
BenchStats run_matrix(const std::filesystem::path& corpus_dir, const BenchConfig& cfg,
                      const std::filesystem::path& out_dir);

std::vector<nlohmann::json> read_results(const std::filesystem::path& results_jsonl);

/// Rebuilds the run record fields the metrics need from a results line.
RunRecord record_from_result(const nlohmann::json& line);

/// Aggregates results lines into summary CSV text.
std::string summary_csv(const std::vector<nlohmann::json>& results,
                        const std::vector<int>& checkpoints = {0, 250, 500, 1000, 1500});

/// Reads in_dir/results.jsonl and writes the summary CSV to out_csv.
void report(const std::filesystem::path& in_dir, const std::filesystem::path& out_csv);

}  // namespace nirrt

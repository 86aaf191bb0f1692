// nirrt: generate worlds, run planners, run benchmark matrices.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nirrt/bench.hpp"
#include "nirrt/errors.hpp"
#include "nirrt/planner.hpp"
#include "nirrt/problem_gen.hpp"
#include "nirrt/training_data.hpp"
#include "nirrt/world_io.hpp"

namespace fs = std::filesystem;
using namespace nirrt;

namespace {

std::vector<std::string> family_names() {
  return {kFamilies.begin(), kFamilies.end()};
}

std::vector<std::string> planner_names() {
  return {"rrt-star", "irrt-star", "nrrt-png", "nirrt-png", "nirrt-png-f", "nirrt-png-fc"};
}

std::vector<PlannerKind> parse_planners(const std::string& list) {
  std::vector<PlannerKind> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(planner_kind_from_string(item));
  }
  if (out.empty()) throw ContractViolation("--planners is empty");
  return out;
}

void write_or_print(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text << '\n';
    return;
  }
  const fs::path p(out);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream os(p, std::ios::trunc);
  if (!os) throw FormatError("cannot write " + out);
  os << text << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neural informed RRT* planning toolkit"};
  app.require_subcommand(1);

  std::string family;
  int count = 0;
  std::uint64_t seed = 0;
  std::string out;

  auto* gen = app.add_subcommand("gen-worlds", "Generate a corpus of world files");
  gen->add_option("--family", family, "World family")
      ->required()
      ->check(CLI::IsMember(family_names()));
  gen->add_option("--count", count, "Number of worlds")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "First instance seed");
  gen->add_option("--out", out, "Output directory")->required();

  std::string world_file, planner = "nirrt-png-fc", provider = "oracle";
  int iters = 0;
  double alpha = 0.9;
  bool with_path = false;
  auto* plan = app.add_subcommand("plan", "Run one planner on one world");
  plan->add_option("--world", world_file, "World JSON file")->required()->check(CLI::ExistingFile);
  plan->add_option("--planner", planner, "Planner id")->check(CLI::IsMember(planner_names()));
  plan->add_option("--provider", provider, "oracle or remote:URL");
  plan->add_option("--iters", iters, "Iterations (0 keeps the default)")
      ->check(CLI::NonNegativeNumber);
  plan->add_option("--seed", seed, "Random seed");
  plan->add_option("--alpha", alpha, "Guidance update ratio");
  plan->add_option("--out", out, "Run record JSON (stdout when omitted)");
  plan->add_flag("--path", with_path, "Include the best path in the record");

  std::string corpus, planners = "rrt-star,irrt-star,nirrt-png-fc";
  int seeds = 1, threads = 0;
  auto* bench = app.add_subcommand("bench", "Run a planner x problem x seed matrix");
  bench->add_option("--corpus", corpus, "Directory of world files")
      ->required()
      ->check(CLI::ExistingDirectory);
  bench->add_option("--planners", planners, "Comma separated planner ids");
  bench->add_option("--seeds", seeds, "Seeds per problem")->check(CLI::PositiveNumber);
  bench->add_option("--base-seed", seed, "Base seed");
  bench->add_option("--iters", iters, "Iterations (0 keeps the default)")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--alpha", alpha, "Guidance update ratio");
  bench->add_option("--provider", provider, "oracle or remote:URL");
  bench->add_option("--threads", threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--out", out, "Output directory")->required();

  int n_points = 2048;
  double eta = 10.0;
  family = "random2d";
  auto* training = app.add_subcommand("gen-training-data", "Emit labelled point clouds");
  training->add_option("--count", count, "Number of records")
      ->required()
      ->check(CLI::NonNegativeNumber);
  training->add_option("--seed", seed, "First instance seed");
  training->add_option("--out", out, "Output JSON-lines file")->required();
  training->add_option("--family", family, "World family")->check(CLI::IsMember(family_names()));
  training->add_option("--points", n_points, "Points per record")->check(CLI::PositiveNumber);
  training->add_option("--eta", eta, "Label radius")->check(CLI::PositiveNumber);

  std::string in_dir;
  auto* rep = app.add_subcommand("report", "Summarize a bench directory as CSV");
  rep->add_option("--in", in_dir, "Bench output directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  rep->add_option("--out", out, "CSV file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto files = generate_corpus(family, count, seed, out);
      std::cerr << "wrote " << files.size() << " worlds to " << out << '\n';
    } else if (*plan) {
      const CorpusEntry entry =
          make_corpus_entry(fs::path(world_file).stem().string(), read_problem_file(world_file));
      const PlannerKind kind = planner_kind_from_string(planner);
      NirrtConfig cfg = NirrtConfig::defaults_for(kind, entry.problem.world.dim());
      if (iters > 0) cfg.planner.max_iterations = iters;
      cfg.alpha = alpha;
      std::unique_ptr<GuidanceProvider> guide;
      if (cfg.variant.guided) guide = make_provider(provider, entry.problem, cfg.guidance.eta);
      PlanResult res = run_planner(entry.problem, guide.get(), cfg, Rng(seed));
      res.record.problem_id = entry.id;
      if (!with_path) res.record.best_path.clear();
      nlohmann::json j = run_record_to_json(res.record);
      if (entry.c_opt) j["c_opt"] = *entry.c_opt;
      write_or_print(out, j.dump());
    } else if (*bench) {
      BenchConfig cfg;
      cfg.planners = parse_planners(planners);
      cfg.seeds = seeds;
      cfg.base_seed = seed;
      if (iters > 0) cfg.iterations = iters;
      cfg.alpha = alpha;
      cfg.provider = provider;
      cfg.threads = threads;
      const BenchStats s = run_matrix(corpus, cfg, out);
      std::cerr << s.total << " cells: " << s.run << " run, " << s.skipped << " skipped, "
                << s.failed << " failed\n";
      return s.failed > 0 ? 3 : 0;
    } else if (*training) {
      write_training_data(out, count, seed, family, n_points, eta);
    } else if (*rep) {
      report(in_dir, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "nirrt: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

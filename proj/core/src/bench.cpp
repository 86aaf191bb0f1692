#include "nirrt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "nirrt/metrics.hpp"
#include "nirrt/problem_gen.hpp"
#include "nirrt/providers.hpp"
#include "nirrt/visibility_graph.hpp"
#include "nirrt/world_io.hpp"

namespace nirrt {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

bool visibility_applicable(const World& world) {
  if (world.dim() != 2 || world.clearance() != 0.0) return false;
  return std::all_of(world.obstacles().begin(), world.obstacles().end(),
                     [](const Obstacle& o) { return o.is_box(); });
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string tol_key(double tol) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", tol);
  return buf;
}

std::string fmt(double v) {
  if (!std::isfinite(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

CorpusEntry make_corpus_entry(std::string id, ProblemInstance problem) {
  CorpusEntry e{std::move(id), std::move(problem), std::nullopt, std::nullopt};
  if (visibility_applicable(e.problem.world)) {
    if (const auto p = visibility_shortest_path(e.problem.world, e.problem.start, e.problem.goal)) {
      e.c_opt = p->cost;
    }
    if (e.problem.meta.wall) {
      if (const auto f = visibility_shortest_path(close_gap(e.problem), e.problem.start,
                                                  e.problem.goal)) {
        e.flank_cost = f->cost;
      }
    }
  }
  return e;
}

std::vector<CorpusEntry> load_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw FormatError("corpus directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir)) {
    if (de.is_regular_file() && de.path().extension() == ".json") files.push_back(de.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.stem() < b.stem(); });
  std::vector<CorpusEntry> out;
  for (const fs::path& f : files) {
    out.push_back(make_corpus_entry(f.stem().string(), read_problem_file(f)));
  }
  return out;
}

ProblemInstance generate_instance(const std::string& family, int index, std::uint64_t seed) {
  Rng rng(seed);
  const auto k = static_cast<std::size_t>(index) % 5;
  if (family == "center-block") {
    const double block =
        rng.uniform(center_block::kMinBlockWidth, center_block::kMaxBlockWidth);
    return gen_center_block(center_block::kMapWidths[k], block, rng);
  }
  if (family == "narrow-passage") return gen_narrow_passage(narrow_passage::kGapHeights[k], rng);
  if (family == "random2d") return gen_random_world_2d(rng);
  if (family == "random3d") return gen_random_world_3d(rng);
  throw ContractViolation("unknown family '" + family + "'");
}

std::vector<fs::path> generate_corpus(const std::string& family, int count, std::uint64_t seed,
                                      const fs::path& out_dir) {
  if (count < 0) throw ContractViolation("generate_corpus: negative count");
  fs::create_directories(out_dir);
  std::vector<fs::path> out;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    const fs::path path = out_dir / (family + "_" + std::to_string(s) + ".json");
    write_problem_file(path, generate_instance(family, k, s));
    out.push_back(path);
  }
  return out;
}

std::unique_ptr<GuidanceProvider> make_provider(const std::string& spec,
                                                const ProblemInstance& problem, double eta) {
  if (spec == "oracle") return std::make_unique<OracleGuidanceProvider>(problem.world, eta);
  if (spec.rfind("remote:", 0) == 0) {
    return std::make_unique<RemoteGuidanceProvider>(provider_url_from_env(spec.substr(7)));
  }
  if (spec == "remote") {
    const std::string url = provider_url_from_env("");
    if (url.empty()) throw ContractViolation("remote provider needs a URL or NIRRT_PROVIDER_URL");
    return std::make_unique<RemoteGuidanceProvider>(url);
  }
  throw ContractViolation("unknown provider '" + spec + "'");
}

std::uint64_t cell_seed(const std::string& problem_id, int seed_index, std::uint64_t base_seed) {
  return splitmix64(fnv1a(problem_id) ^
                    splitmix64(base_seed + static_cast<std::uint64_t>(seed_index)));
}

json run_cell(const CorpusEntry& entry, PlannerKind planner, int seed_index,
              const BenchConfig& cfg, double* wall_time_s) {
  const std::string planner_id(to_string(planner));
  const std::uint64_t seed = cell_seed(entry.id, seed_index, cfg.base_seed);
  json line{{"cell", entry.id + "/" + planner_id + "/" + std::to_string(seed_index)},
            {"problem", entry.id},
            {"family", entry.problem.meta.family},
            {"planner", planner_id},
            {"seed_index", seed_index},
            {"seed", seed}};
  try {
    NirrtConfig nc = NirrtConfig::defaults_for(planner, entry.problem.world.dim());
    if (cfg.iterations) nc.planner.max_iterations = *cfg.iterations;
    nc.alpha = cfg.alpha;
    std::unique_ptr<GuidanceProvider> provider;
    if (nc.variant.guided) provider = make_provider(cfg.provider, entry.problem, nc.guidance.eta);
    PlanResult res = run_planner(entry.problem, provider.get(), nc, Rng(seed));
    res.record.problem_id = entry.id;
    const RunRecord& r = res.record;
    if (wall_time_s) *wall_time_s = r.wall_time_s;

    line["status"] = "ok";
    line["iterations"] = r.iterations;
    line["first_solution"] = optional_int(r.first_solution_iteration());
    line["final_cost"] = cost_to_json(r.final_cost());
    line["c_opt"] = entry.c_opt ? json(*entry.c_opt) : json(nullptr);
    line["flank_cost"] = entry.flank_cost ? json(*entry.flank_cost) : json(nullptr);
    json tol = json::object();
    if (entry.c_opt) {
      for (double t : cfg.tolerances) {
        tol[tol_key(t)] = optional_int(metric_iters_to_threshold(r, *entry.c_opt, t));
      }
    }
    line["iters_to_tol"] = tol;
    line["through_gap"] =
        entry.flank_cost ? optional_int(metric_through_gap(r, *entry.flank_cost)) : json(nullptr);
    line["retriggers"] = r.count(EventKind::Retrigger);
    line["guidance_unavailable"] = r.count(EventKind::GuidanceUnavailable) > 0;
    line["trace"] = trace_to_json(r.trace);
  } catch (const std::exception& e) {
    line["status"] = "failed";
    line["error"] = e.what();
  }
  return line;
}

std::vector<json> read_results(const fs::path& results_jsonl) {
  std::vector<json> out;
  std::ifstream in(results_jsonl);
  std::string s;
  while (std::getline(in, s)) {
    if (s.empty()) continue;
    try {
      out.push_back(json::parse(s));
    } catch (const json::exception&) {
      // A torn final line from an interrupted run; the cell reruns.
    }
  }
  return out;
}

BenchStats run_matrix(const fs::path& corpus_dir, const BenchConfig& cfg, const fs::path& out_dir) {
  if (cfg.planners.empty()) throw ContractViolation("run_matrix: no planners");
  if (cfg.seeds <= 0) throw ContractViolation("run_matrix: seeds must be positive");
  const std::vector<CorpusEntry> corpus = load_corpus(corpus_dir);
  fs::create_directories(out_dir);
  const fs::path results_path = out_dir / "results.jsonl";
  const fs::path timings_path = out_dir / "timings.csv";

  struct Cell {
    std::size_t entry;
    PlannerKind planner;
    int seed_index;
    std::string id;
  };
  std::vector<Cell> cells;
  for (std::size_t e = 0; e < corpus.size(); ++e) {
    for (PlannerKind p : cfg.planners) {
      for (int s = 0; s < cfg.seeds; ++s) {
        cells.push_back({e, p, s,
                         corpus[e].id + "/" + std::string(to_string(p)) + "/" + std::to_string(s)});
      }
    }
  }

  std::map<std::string, json> done;
  for (json& line : read_results(results_path)) {
    if (line.value("status", "") == "ok" && line.contains("cell")) {
      std::string id = line["cell"].get<std::string>();
      done[std::move(id)] = std::move(line);
    }
  }

  BenchStats stats;
  stats.total = static_cast<int>(cells.size());
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (done.count(cells[i].id)) {
      ++stats.skipped;
    } else {
      todo.push_back(i);
    }
  }

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= todo.size()) return;
      const Cell& c = cells[todo[k]];
      double wall = 0.0;
      json line = run_cell(corpus[c.entry], c.planner, c.seed_index, cfg, &wall);
      std::lock_guard lock(mu);
      ++stats.run;
      if (line["status"] != "ok") ++stats.failed;
      std::ofstream(results_path, std::ios::app) << line.dump() << '\n';
      std::ofstream(timings_path, std::ios::app) << c.id << ',' << wall << '\n';
      done[c.id] = std::move(line);
    }
  };
  int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, static_cast<int>(todo.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  // Canonical order: enumeration order, then any foreign cells by id.
  std::vector<json> ordered;
  std::set<std::string> placed;
  for (const Cell& c : cells) {
    if (auto it = done.find(c.id); it != done.end()) {
      ordered.push_back(it->second);
      placed.insert(c.id);
    }
  }
  for (const auto& [id, line] : done) {
    if (!placed.count(id)) ordered.push_back(line);
  }
  const fs::path tmp = out_dir / "results.jsonl.tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    for (const json& line : ordered) out << line.dump() << '\n';
  }
  fs::rename(tmp, results_path);
  std::ofstream(out_dir / "summary.csv", std::ios::trunc) << summary_csv(ordered, cfg.checkpoints);
  return stats;
}

RunRecord record_from_result(const json& line) {
  RunRecord r;
  r.planner = line.at("planner").get<std::string>();
  r.problem_id = line.at("problem").get<std::string>();
  r.seed = line.at("seed").get<std::uint64_t>();
  r.iterations = line.value("iterations", 0);
  if (line.contains("trace")) r.trace = trace_from_json(line["trace"]);
  return r;
}

std::string summary_csv(const std::vector<json>& results, const std::vector<int>& checkpoints) {
  // (family, planner) -> metric -> values; absent values counted as missing.
  struct Column {
    std::vector<double> values;
    int missing = 0;
  };
  std::map<std::pair<std::string, std::string>, std::map<std::string, Column>> table;
  std::map<std::string, std::vector<RunRecord>> by_family;

  auto add = [](Column& col, const json& v) {
    if (v.is_number()) {
      col.values.push_back(v.get<double>());
    } else {
      ++col.missing;
    }
  };
  for (const json& line : results) {
    if (line.value("status", "") != "ok") continue;
    const std::string family = line.value("family", "");
    auto& metrics = table[{family, line["planner"].get<std::string>()}];
    add(metrics["first_solution_iter"], line["first_solution"]);
    add(metrics["final_cost"], line["final_cost"]);
    add(metrics["retriggers"], line["retriggers"]);
    for (const auto& [tol, v] : line["iters_to_tol"].items()) {
      const int pct = static_cast<int>(std::lround(std::stod(tol) * 100.0));
      add(metrics["iters_to_" + std::to_string(pct) + "pct"], v);
    }
    if (!line["flank_cost"].is_null()) add(metrics["iters_through_gap"], line["through_gap"]);
    by_family[family].push_back(record_from_result(line));
  }
  std::ostringstream os;
  os << "family,planner,metric,n,missing,mean,ci95,median\n";
  for (const auto& [key, metrics] : table) {
    for (const auto& [name, col] : metrics) {
      const SummaryStat s = summarize(col.values);
      os << key.first << ',' << key.second << ',' << name << ',' << s.n << ',' << col.missing << ','
         << (s.n ? fmt(s.mean) : "") << ',' << (s.n ? fmt(s.ci95) : "") << ','
         << (s.n ? fmt(s.median) : "") << '\n';
    }
  }
  // Relative cost is a ratio to the paired baseline run, so it aggregates
  // per family rather than per line.
  for (const auto& [family, records] : by_family) {
    for (const RelativeCostRow& row : metric_relative_cost(records, checkpoints)) {
      os << family << ',' << row.planner << ",relative_cost_d" << row.checkpoint << ',' << row.n
         << ',' << row.excluded + row.missing_baseline << ',' << (row.n ? fmt(row.mean) : "")
         << ',' << (row.n ? fmt(row.ci95) : "") << ",\n";
    }
  }
  return os.str();
}

void report(const fs::path& in_dir, const fs::path& out_csv) {
  const fs::path results = in_dir / "results.jsonl";
  if (!fs::exists(results)) throw FormatError("no results.jsonl in " + in_dir.string());
  std::ofstream out(out_csv, std::ios::trunc);
  if (!out) throw FormatError("cannot write " + out_csv.string());
  out << summary_csv(read_results(results));
}

}  // namespace nirrt

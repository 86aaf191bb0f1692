#include "nirrt/planner.hpp"

#include <chrono>
#include <cmath>

namespace nirrt {

namespace {

constexpr std::array<std::pair<PlannerKind, std::string_view>, 6> kPlannerIds{{
    {PlannerKind::RrtStar, "rrt-star"},
    {PlannerKind::IrrtStar, "irrt-star"},
    {PlannerKind::NrrtPng, "nrrt-png"},
    {PlannerKind::NirrtPng, "nirrt-png"},
    {PlannerKind::NirrtPngF, "nirrt-png-f"},
    {PlannerKind::NirrtPngFC, "nirrt-png-fc"},
}};

}  // namespace

std::string_view to_string(PlannerKind kind) {
  for (const auto& [k, id] : kPlannerIds) {
    if (k == kind) return id;
  }
  return "unknown";
}

PlannerKind planner_kind_from_string(std::string_view id) {
  for (const auto& [k, name] : kPlannerIds) {
    if (name == id) return k;
  }
  throw ContractViolation("unknown planner '" + std::string(id) + "'");
}

PlannerVariant PlannerVariant::of(PlannerKind kind) {
  switch (kind) {
    case PlannerKind::RrtStar: return {false, false, false, false, false};
    case PlannerKind::IrrtStar: return {true, false, false, false, false};
    case PlannerKind::NrrtPng: return {false, true, false, false, false};
    case PlannerKind::NirrtPng: return {true, true, true, false, false};
    case PlannerKind::NirrtPngF: return {true, true, true, true, false};
    case PlannerKind::NirrtPngFC: return {true, true, true, true, true};
  }
  throw ContractViolation("unknown planner kind");
}

NirrtConfig NirrtConfig::defaults_for(PlannerKind kind, int dim) {
  NirrtConfig cfg;
  cfg.planner = PlannerConfig::defaults_for(dim);
  cfg.guidance.eta = cfg.planner.eta;
  cfg.variant = PlannerVariant::of(kind);
  cfg.planner_id = std::string(to_string(kind));
  return cfg;
}

void NirrtConfig::validate() const {
  planner.validate();
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ContractViolation("alpha must be in [0, 1]");
  if (!(base_branch_probability >= 0.5 && base_branch_probability <= 1.0)) {
    throw ContractViolation("base branch probability must be in [0.5, 1]");
  }
  if (guidance.n_points <= 0 || guidance.n_guide <= 0) {
    throw ContractViolation("guidance needs positive n_points and n_guide");
  }
}

PlannerStreams::PlannerStreams(const Rng& root)
    : sample(root.fork(0)), mix(root.fork(1)), pick(root.fork(2)), guide(root.fork(3)) {}

bool should_retrigger(double c_best, double c_update, double alpha) {
  if (!std::isfinite(c_best) || alpha <= 0.0) return false;
  if (!std::isfinite(c_update)) return true;
  return c_best < alpha * c_update;
}

State base_sample(const NirrtState& state, const ProblemInstance& problem,
                  const NirrtConfig& cfg, Rng& rng) {
  if (cfg.variant.informed && std::isfinite(state.c_best)) {
    const double c_min = distance(problem.start, problem.goal);
    return informed_or_uniform(InformedSet(problem.start, problem.goal,
                                           std::max(state.c_best, c_min)),
                               problem.world, rng);
  }
  return sample_free(problem.world, rng);
}

namespace {

GuidanceConfig guidance_config(const NirrtConfig& cfg) {
  GuidanceConfig g = cfg.guidance;
  g.focus = cfg.variant.focus;
  g.connect = cfg.variant.connect;
  return g;
}

void add_event(RunRecord* record, int iteration, EventKind kind, double value,
               std::string detail = {}) {
  if (record) record->events.push_back({iteration, kind, value, std::move(detail)});
}

// Runs the guidance pipeline; failures leave the previous set in place.
void refresh_guidance(NirrtState& state, const ProblemInstance& problem,
                      GuidanceProvider& provider, const NirrtConfig& cfg, Rng& rng,
                      int iteration, EventKind kind, RunRecord* record) {
  try {
    GuideResult r = pointnet_guide(problem, state.c_best, provider, guidance_config(cfg), rng);
    state.guide = std::move(r.guide);
    add_event(record, iteration, kind, state.c_best,
              "guide=" + std::to_string(state.guide.size()) +
                  " rounds=" + std::to_string(r.rounds.size()) +
                  (r.connected ? " connected" : ""));
  } catch (const GuidanceUnavailable& e) {
    state.guidance_disabled = true;
    state.guide = {};
    add_event(record, iteration, EventKind::GuidanceUnavailable, state.c_best, e.what());
  } catch (const DegenerateDomainError& e) {
    add_event(record, iteration, EventKind::GuidanceDegenerate, state.c_best, e.what());
  }
}

}  // namespace

SampleDraw pointnet_guided_sampling(NirrtState& state, const ProblemInstance& problem,
                                    GuidanceProvider* provider, const NirrtConfig& cfg,
                                    PlannerStreams& streams, int iteration, RunRecord* record) {
  SampleDraw draw;
  if (cfg.variant.retrigger && provider && !state.guidance_disabled &&
      should_retrigger(state.c_best, state.c_update, cfg.alpha)) {
    refresh_guidance(state, problem, *provider, cfg, streams.guide, iteration,
                     EventKind::Retrigger, record);
    state.c_update = state.c_best;
    draw.retriggered = true;
  }
  const double u = streams.mix.uniform01();
  if (u < cfg.base_branch_probability || state.guide.empty() || state.guidance_disabled) {
    draw.x_rand = base_sample(state, problem, cfg, streams.sample);
    draw.branch = SampleBranch::Base;
  } else {
    draw.x_rand = state.guide.points[streams.pick.index(state.guide.size())];
    draw.branch = SampleBranch::Guide;
  }
  return draw;
}

PlanResult run_planner(const ProblemInstance& problem_in, GuidanceProvider* provider,
                       const NirrtConfig& cfg, const Rng& rng) {
  cfg.validate();
  validate_problem(problem_in);
  if (cfg.variant.guided && !provider) {
    throw ContractViolation("guided planner variant needs a guidance provider");
  }
  const auto t0 = std::chrono::steady_clock::now();

  ProblemInstance problem = problem_in;
  if (cfg.planner.collision_resolution) {
    problem.world = problem.world.with_resolution(*cfg.planner.collision_resolution);
  }
  PlannerStreams streams(rng);
  PlanResult result{NirrtState(Tree(problem.start, cfg.planner.eta)), RunRecord{}};
  NirrtState& state = result.state;
  RunRecord& record = result.record;
  record.planner = cfg.planner_id;
  record.seed = rng.seed();
  record.record_cost(0, state.c_best);

  if (cfg.variant.guided) {
    refresh_guidance(state, problem, *provider, cfg, streams.guide, 0, EventKind::Guidance,
                     &record);
  }

  for (int i = 1; i <= cfg.planner.max_iterations; ++i) {
    SampleDraw draw;
    if (cfg.variant.guided) {
      draw = pointnet_guided_sampling(state, problem, provider, cfg, streams, i, &record);
    } else {
      draw.x_rand = base_sample(state, problem, cfg, streams.sample);
    }
    if (cfg.record_samples) record.samples.push_back(draw.x_rand);

    if (const auto v = extend_and_rewire(state.tree, draw.x_rand, problem.world, cfg.planner)) {
      const State& x_new = state.tree.vertex(*v);
      if (in_goal_region(x_new, problem.goal, cfg.planner) &&
          collision_free_segment(problem.world, x_new, problem.goal)) {
        state.x_soln.push_back(*v);
      }
    }
    const double before = state.c_best;
    state.c_best = solution_cost(state.tree, state.x_soln, problem.goal);
    if (!std::isfinite(before) && std::isfinite(state.c_best)) {
      record.events.push_back({i, EventKind::FirstSolution, state.c_best, {}});
    }
    record.record_cost(i, state.c_best);
  }

  record.iterations = cfg.planner.max_iterations;
  record.tree_size = state.tree.size();
  if (const auto best = best_solution(state.tree, state.x_soln, problem.goal)) {
    record.best_path = state.tree.path_to(*best);
    record.best_path.push_back(problem.goal);
  }
  record.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

PlanResult nirrt_star(const ProblemInstance& problem, GuidanceProvider& provider,
                      const NirrtConfig& cfg, const Rng& rng) {
  return run_planner(problem, &provider, cfg, rng);
}

PlanResult rrt_star(const ProblemInstance& problem, const PlannerConfig& cfg, const Rng& rng) {
  NirrtConfig c = NirrtConfig::defaults_for(PlannerKind::RrtStar, problem.world.dim());
  c.planner = cfg;
  return run_planner(problem, nullptr, c, rng);
}

PlanResult irrt_star(const ProblemInstance& problem, const PlannerConfig& cfg, const Rng& rng) {
  NirrtConfig c = NirrtConfig::defaults_for(PlannerKind::IrrtStar, problem.world.dim());
  c.planner = cfg;
  return run_planner(problem, nullptr, c, rng);
}

}  // namespace nirrt

#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nirrt/guidance.hpp"
#include "nirrt/rng.hpp"
#include "nirrt/rrt_star.hpp"
#include "nirrt/run_record.hpp"

namespace nirrt {

enum class PlannerKind { RrtStar, IrrtStar, NrrtPng, NirrtPng, NirrtPngF, NirrtPngFC };

std::string_view to_string(PlannerKind kind);
/// Accepts the CLI ids: rrt-star, irrt-star, nrrt-png, nirrt-png, nirrt-png-f, nirrt-png-fc.
PlannerKind planner_kind_from_string(std::string_view id);

/// Which parts of the guided loop are switched on.
struct PlannerVariant {
  /// Informed sampling once a solution exists.
  bool informed = true;
  /// Draw half the samples from the guidance set.
  bool guided = true;
  /// Re-run guidance when c_best < alpha * c_update.
  bool retrigger = true;
  bool focus = true;
  bool connect = true;

  static PlannerVariant of(PlannerKind kind);
};

struct NirrtConfig {
  PlannerConfig planner;
  GuidanceConfig guidance;
  PlannerVariant variant;
  /// Path cost improvement ratio for guidance updates.
  double alpha = 0.9;
  /// Probability of the informed/uniform branch in mixed sampling.
  double base_branch_probability = 0.5;
  bool record_samples = false;
  /// Name written into run records.
  std::string planner_id = "nirrt-png-fc";

  static NirrtConfig defaults_for(PlannerKind kind, int dim);
  void validate() const;
};

/// Independent streams so planners sharing a seed see the same uniform /
/// informed sample sequence wherever their branching allows.
struct PlannerStreams {
  explicit PlannerStreams(const Rng& root);
  Rng sample;
  Rng mix;
  Rng pick;
  Rng guide;
};

/// Planner state carried between iterations.
struct NirrtState {
  explicit NirrtState(Tree t) : tree(std::move(t)) {}

  Tree tree;
  std::vector<int> x_soln;
  double c_best = std::numeric_limits<double>::infinity();
  double c_update = std::numeric_limits<double>::infinity();
  GuidanceSet guide;
  bool guidance_disabled = false;
};

enum class SampleBranch { Base, Guide };

struct SampleDraw {
  State x_rand;
  SampleBranch branch = SampleBranch::Base;
  bool retriggered = false;
};

/// True when the guidance set should be recomputed.
bool should_retrigger(double c_best, double c_update, double alpha);

/// Informed sample when a solution exists and the variant is informed,
/// uniform free sample otherwise.
State base_sample(const NirrtState& state, const ProblemInstance& problem,
                  const NirrtConfig& cfg, Rng& rng);

/// One call of the guided sampler: optionally refresh the guidance set,
/// then pick the base branch with probability cfg.base_branch_probability
/// or a uniform guidance point otherwise (base branch when the set is
/// empty). Guidance events are appended to `record` when given.
SampleDraw pointnet_guided_sampling(NirrtState& state, const ProblemInstance& problem,
                                    GuidanceProvider* provider, const NirrtConfig& cfg,
                                    PlannerStreams& streams, int iteration,
                                    RunRecord* record = nullptr);

struct PlanResult {
  NirrtState state;
  RunRecord record;

  const Tree& tree() const { return state.tree; }
};

/// The planning loop shared by every variant; `provider` may be null for
/// unguided variants.
PlanResult run_planner(const ProblemInstance& problem, GuidanceProvider* provider,
                       const NirrtConfig& cfg, const Rng& rng);

PlanResult nirrt_star(const ProblemInstance& problem, GuidanceProvider& provider,
                      const NirrtConfig& cfg, const Rng& rng);
PlanResult rrt_star(const ProblemInstance& problem, const PlannerConfig& cfg, const Rng& rng);
PlanResult irrt_star(const ProblemInstance& problem, const PlannerConfig& cfg, const Rng& rng);

}  // namespace nirrt

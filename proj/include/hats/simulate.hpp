// Truncation-correct simulation of the infinite game, run reports with exact
// per-run checks, finite-window density proxies, and statistical event
// frequency estimates with explicit confidence levels.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hats/strategy.hpp"
#include "hats/team_plan.hpp"

namespace hats {

// Simulates players 1..n of one run: samples hats for the strategy's horizon,
// evaluates correctness, and records checkpoints (the strategy's own marks
// plus a geometric grid and n itself).
OutcomeTrajectory simulate_run(const GuessRule& rule, uint64_t n, const RandomSource& rng,
                               RunArtifacts* art = nullptr);

struct RunReport {
  uint64_t run = 0;
  uint64_t n = 0;
  Rational zbar;
  Rational lower_hat, upper_hat;
  uint64_t k_min = 0;
  bool sure_pass = true;                 // exact per-run structural checks
  std::vector<std::string> violations;
  std::vector<uint8_t> events;           // block wins or team gamble successes
  std::optional<size_t> dispatch;        // mixed strategies
  std::vector<Checkpoint> checkpoints;

  nlohmann::json to_json(bool include_checkpoints = false) const;
};

// Strategy-aware exact checks applied to every run:
//   pairs:        the correct count at every even k is exactly k/2
//   mod-K groups: exactly one correct per complete group
//   blocks:       on a block win, the mean at the block end is at least
//                 1 - n_{j-1}/n_j (exact)
//   teams:        the plan's sure inequalities (see check_team_sure_bounds)
// Unrecognized rules get no structural check.
void apply_sure_checks(const GuessRule& rule, const OutcomeTrajectory& traj,
                       const RunArtifacts& art, RunReport& report);

RunReport run_and_report(const GuessRule& rule, uint64_t n, uint64_t seed, uint64_t run_index,
                         uint64_t k_min);

// Runs `runs` independent runs (seeds split by run index) and returns the
// reports in run order; jobs > 1 distributes runs across threads with a
// deterministic, order-independent merge.
std::vector<RunReport> run_many(const GuessRule& rule, uint64_t n, uint64_t runs, uint64_t seed,
                                uint64_t k_min, unsigned jobs = 1);

struct TheoremMainReport {
  uint64_t runs = 0;
  uint64_t n = 0;
  double tol = 0.0;
  bool pass = true;
  uint64_t failures = 0;
  std::string detail;
  nlohmann::json to_json() const;
};

// Finite-horizon stand-in for the almost-sure density bounds: in every run,
// the window minimum of the prefix mean must not exceed 1/2 + tol and the
// window maximum must reach at least 1/2 - tol.
TheoremMainReport verify_theorem_main(const GuessRule& rule, uint64_t n, uint64_t runs,
                                      double tol, uint64_t seed, uint64_t k_min = 100,
                                      unsigned jobs = 1);

struct FrequencyReport {
  std::string event;
  uint64_t hits = 0;
  uint64_t trials = 0;
  double estimate = 0.0;
  double target = 0.0;
  double ci99_halfwidth = 0.0;  // normal approximation at z = 2.576
  bool within_tolerance = true;
  nlohmann::json to_json() const;
};

FrequencyReport frequency_report(const std::string& event, uint64_t hits, uint64_t trials,
                                 double target, double tolerance);

// Block/team events are conjunctions of parities of disjoint player ranges;
// the parity of a range of fair hat bits is itself a fair bit, so the sampler
// draws those parity bits directly (cheap, exactly the event's law).  The
// full-run path cross-checks the same events at its own sample size.
std::vector<FrequencyReport> block_event_frequencies(size_t blocks, uint64_t trials,
                                                     uint64_t seed, double tolerance);

struct TeamEventStats {
  std::vector<FrequencyReport> frequencies;       // per team k >= 1
  std::vector<std::vector<double>> correlations;  // pairwise, aligned with ks
  std::vector<uint64_t> ks;
  double max_abs_correlation = 0.0;
  bool frequencies_pass = true;
};

TeamEventStats team_event_stats(const TeamPlan& plan, size_t max_team, uint64_t trials,
                                uint64_t seed, double tolerance);

struct DensityTargetsReport {
  uint64_t runs = 0;
  uint64_t n = 0;
  bool sure_pass = true;
  uint64_t sure_failures = 0;
  std::vector<std::string> sample_violations;
  std::vector<uint64_t> event_counts;  // A_k occurrences across runs (index = team)
  uint64_t checked_teams = 0;
  nlohmann::json to_json() const;
};

// Simulates a validated plan and asserts every sure inequality exactly on
// every run; aggregates team-event counts for the statistical layer.
DensityTargetsReport verify_density_targets(const TeamPlan& plan, uint64_t n, uint64_t runs,
                                            uint64_t seed, unsigned jobs = 1);

}  // namespace hats

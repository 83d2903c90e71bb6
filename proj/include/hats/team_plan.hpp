// Team plans: exact rational parameter sequences for the team strategy that
// pins the lower prefix density at 1/2 while driving the upper density to a
// target u.  Teams split into gambler blocks (conditional even-odd chains)
// and recovery squads (unconditional pairs).  All arithmetic is exact; every
// structural constraint is validated by an independent checker.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hats/rational.hpp"

#include "json.hpp"

namespace hats {

enum class TeamMode { Win, Lose };

inline uint64_t floor_log2(uint64_t v) {
  uint64_t r = 0;
  while (v >>= 1) ++r;
  return r;
}

// Number of gambler blocks of team k; the +2 keeps it positive from k = 0.
inline uint64_t blocks_for_team(uint64_t k) { return floor_log2(k + 2); }

struct TeamParams {
  uint64_t k = 0;        // team index
  uint64_t n = 0;        // first player of the team is n+1
  uint64_t g = 0;        // gambler squad size (= alpha * n, integral)
  uint64_t r = 0;        // recovery squad size (even)
  uint64_t b = 1;        // number of gambler blocks
  uint64_t s = 0;        // gambler block size (= g/b, even)
  Rational u_k;          // per-team density target, in (1/2, target)
  Rational alpha;        // (u_k - 1/2)/(1 - u_k); 0 for team 0
  Rational eps;          // sandwich half-width at this team's start
  TeamMode mode = TeamMode::Win;

  uint64_t end() const { return n + g + r; }  // == n_{k+1}
};

struct TeamPlan {
  Rational u{1, 2};                 // upper-density target
  std::optional<Rational> l;        // lower-density target (alternating plans)
  std::string eps_schedule = "harmonic";
  bool pairs_degenerate = false;    // u = l = 1/2: plays plain pairs
  std::vector<TeamParams> teams;
  // Schedule values one past the last team, consumed by the divisibility
  // constraint of the final recovery squad.
  Rational next_alpha;
  uint64_t next_b = 1;
  Rational next_eps;

  uint64_t total_players() const { return teams.empty() ? 0 : teams.back().end(); }

  nlohmann::json to_json() const;
  static TeamPlan from_json(const nlohmann::json& j);
};

// Epsilon schedules: positive, nonincreasing, tending to zero.
Rational harmonic_eps_schedule(uint64_t k);  // 1/(k+2)
Rational dyadic_eps_schedule(uint64_t k);    // 2^-(k+4)
Rational eps_schedule(const std::string& name, uint64_t k);

// Per-team density target schedule: rational u_k with 1/2 < u_k < u tending
// to u.  For u < 1 the schedule depends on k only through the block count
// b_k, which keeps alpha_k/b_k nonincreasing; for u = 1 it additionally makes
// (1-u_k)*b_k nondecreasing and unbounded.  Errors on u = 1/2 (no schedule
// needed there: that target is met by the pairs strategy alone).
Rational default_u_schedule(const Rational& u, uint64_t k);

struct PlanOptions {
  std::string eps = "harmonic";
  // Optional explicit u_k values (index by team); defaults apply beyond the
  // supplied prefix.
  std::vector<Rational> explicit_u;
};

// Builds num_teams teams targeting upper density u (1/2 <= u <= 1) with
// minimal even recovery squads.  u = 1/2 yields the pairs-degenerate plan.
// mode Lose builds the mirrored plan (u is then the mirrored target 1 - l).
TeamPlan generate_plan(const Rational& u, uint64_t num_teams, TeamMode mode = TeamMode::Win,
                       const PlanOptions& options = {});

// Alternating plan for targets (l, u): even teams chase u, odd teams chase l.
TeamPlan generate_alternating_plan(const Rational& l, const Rational& u, uint64_t num_teams,
                                   const PlanOptions& options = {});

struct PlanCheck {
  std::string what;
  bool ok = false;
  std::string detail;
};

struct PlanValidation {
  bool pass = true;
  std::vector<PlanCheck> checks;
  std::string first_violation;

  void add(const std::string& what, bool ok, const std::string& detail = "");
  nlohmann::json to_json() const;
};

// Independent constraint checker: re-derives every invariant from the stored
// fields alone, sharing no code with the generator's recursion.
PlanValidation validate_plan(const TeamPlan& plan);

}  // namespace hats

// Team strategy driven by a TeamPlan.  Gambler blocks chain even-odd
// conditionally on the preceding blocks of their team; recovery squads play
// pairs unconditionally, pulling the prefix mean back toward 1/2 at team
// boundaries.  "Win" teams gamble on all-even block parities (pushing the
// prefix mean up on success); "lose" teams mirror the trigger to all-odd
// (pushing it down).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hats/strategy.hpp"
#include "hats/team_plan.hpp"

namespace hats {

class TeamStrategy : public GuessRule {
 public:
  explicit TeamStrategy(TeamPlan plan);

  std::string name() const override;
  uint64_t horizon(uint64_t n) const override;
  std::vector<uint64_t> window(uint64_t i) const override;
  uint64_t guess(uint64_t i, const HatAssignment& hats, const RandomSource&) const override;
  void evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&, BitVec& correct,
                RunArtifacts* art) const override;
  std::vector<uint64_t> checkpoint_marks(uint64_t n) const override;

  const TeamPlan& plan() const { return plan_; }
  size_t team_of(uint64_t player) const;

 private:
  TeamPlan plan_;
};

// Exact verification of the plan's sure inequalities on one simulated run.
// All checks are evaluated with exact arithmetic at even player indices (the
// pairing grid; every squad boundary is even).  For each team k >= 1 in
// range:
//   - at the team start:       1/2 - eps_k < mean < 1/2 + eps_k  (strict)
//   - across the team (win):   mean <= (n(1/2+eps)+g)/(n+g)  and
//                              mean >= n(1/2-eps)/(n+s)
//   - across the team (lose):  mirrored with s and g exchanged
//   - when the team's gamble succeeded (event A_k), at i0 = n+g:
//       win:  mean >= u_k - eps_k/(1+alpha_k)
//       lose: mean <= (1-u_k) + eps_k/(1+alpha_k)
struct TeamRunCheck {
  bool pass = true;
  uint64_t checked_teams = 0;
  std::vector<std::string> violations;
};

TeamRunCheck check_team_sure_bounds(const TeamPlan& plan, const OutcomeTrajectory& traj,
                                    const RunArtifacts& art);

}  // namespace hats

#include "doctest.h"

#include <cmath>

#include "hats/mixed_strategy.hpp"
#include "hats/simulate.hpp"
#include "hats/strategies.hpp"
#include "hats/team_strategy.hpp"

using namespace hats;

namespace {

// Illegal oracle rule used to demonstrate the power of the density check: it
// reads its own hat, so every guess is right and the window never dips.
class OracleCheat : public GuessRule {
 public:
  std::string name() const override { return "oracle-cheat"; }
  uint64_t horizon(uint64_t n) const override { return n; }
  std::vector<uint64_t> window(uint64_t) const override { return {}; }
  uint64_t guess(uint64_t i, const HatAssignment& hats, const RandomSource&) const override {
    return hats.color(i);
  }
};

}  // namespace

TEST_CASE("identical seeds reproduce identical trajectories") {
  auto rule = StrategySpec::preset("block-powers2").build();
  RandomSource rng = RandomSource::for_run(99, 5);
  OutcomeTrajectory a = simulate_run(*rule, 5000, rng);
  OutcomeTrajectory b = simulate_run(*rule, 5000, rng);
  CHECK(a.correct_bits() == b.correct_bits());
  OutcomeTrajectory c = simulate_run(*rule, 5000, RandomSource::for_run(99, 6));
  CHECK_FALSE(a.correct_bits() == c.correct_bits());
}

TEST_CASE("pairs runs sit at exactly one half on the pairing grid") {
  PairsStrategy pairs;
  RunReport rep = run_and_report(pairs, 10000, 7, 0, 100);
  CHECK(rep.zbar == Rational(1, 2));
  CHECK(rep.sure_pass);  // the exact even-k check ran inside
  // Between pair boundaries the mean ticks by at most 1/(2k).
  CHECK(rep.lower_hat >= Rational(49, 100));
  CHECK(rep.lower_hat <= Rational(1, 2));
  CHECK(rep.upper_hat >= Rational(1, 2));
  CHECK(rep.upper_hat <= Rational(51, 100));
}

TEST_CASE("constant guessing concentrates near one half by the law of large numbers") {
  ConstantStrategy zero(0);
  RunReport rep = run_and_report(zero, 1000000, 11, 0, 100);
  Rational dev = rep.zbar - Rational(1, 2);
  CHECK(abs(dev) < Rational(1, 500));  // 0.002 at N = 10^6
}

TEST_CASE("mod-k groups runs keep exactly one correct per group") {
  ModKGroupsStrategy groups(3);
  RunReport rep = run_and_report(groups, 9999, 13, 0, 100);
  CHECK(rep.sure_pass);
  CHECK(rep.zbar == Rational(1, 3));
}

TEST_CASE("team runs respect the sandwich at every team start") {
  StrategySpec s;
  s.kind = "team";
  s.params = {{"u", "3/4"}, {"teams", 6}, {"eps", "harmonic"}};
  auto rule = s.build();
  auto* team = dynamic_cast<TeamStrategy*>(rule.get());
  REQUIRE(team != nullptr);
  uint64_t n = team->plan().teams[5].n;
  for (uint64_t run = 0; run < 5; ++run) {
    RunReport rep = run_and_report(*rule, n, 17, run, 100);
    CAPTURE(rep.violations.empty() ? "" : rep.violations[0]);
    CHECK(rep.sure_pass);
    for (const auto& t : team->plan().teams) {
      if (t.k == 0 || t.n > n) continue;
      RandomSource rng = RandomSource::for_run(17, run);
      OutcomeTrajectory traj = simulate_run(*rule, n, rng);
      Rational zn = traj.prefix_mean(t.n);
      CHECK(zn > Rational(1, 2) - t.eps);
      CHECK(zn < Rational(1, 2) + t.eps);
      break;  // the report already covers all teams; spot-check one directly
    }
  }
}

TEST_CASE("tampering with a trajectory trips the team bound checker") {
  StrategySpec s;
  s.kind = "team";
  s.params = {{"u", "3/4"}, {"teams", 4}, {"eps", "harmonic"}};
  auto rule = s.build();
  auto* team = dynamic_cast<TeamStrategy*>(rule.get());
  uint64_t n = team->plan().teams[3].n;
  RandomSource rng = RandomSource::for_run(19, 0);
  RunArtifacts art;
  uint64_t h = rule->horizon(n);
  HatAssignment hats = sample_assignment(ColorSpace::binary(), h, rng);
  BitVec correct;
  rule->evaluate(hats, n, rng, correct, &art);
  // Force a long all-correct stretch across a team boundary.
  correct.fill_range(0, n, true);
  OutcomeTrajectory traj(std::move(correct));
  TeamRunCheck check = check_team_sure_bounds(team->plan(), traj, art);
  CHECK_FALSE(check.pass);
}

TEST_CASE("the density window check passes honest rules and flags the cheat") {
  PairsStrategy pairs;
  TheoremMainReport ok = verify_theorem_main(pairs, 20000, 5, 0.02, 23);
  CHECK(ok.pass);
  ConstantStrategy zero(0);
  ok = verify_theorem_main(zero, 20000, 5, 0.02, 23);
  CHECK(ok.pass);
  OracleCheat cheat;
  TheoremMainReport bad = verify_theorem_main(cheat, 20000, 5, 0.02, 23);
  CHECK_FALSE(bad.pass);  // the window minimum never comes down to 0.52
}

TEST_CASE("block event frequencies: fair wins per block, by parity sampling") {
  std::vector<FrequencyReport> freqs = block_event_frequencies(8, 20000, 29, 0.02);
  for (const auto& f : freqs) {
    CHECK(f.within_tolerance);
    CHECK(std::abs(f.estimate - 0.5) < 0.02);
  }
}

TEST_CASE("team event stats: frequencies 2^-b and vanishing correlations") {
  TeamPlan plan = generate_plan(Rational(3, 4), 8);
  TeamEventStats stats = team_event_stats(plan, 7, 50000, 31, 0.02);
  REQUIRE(!stats.frequencies.empty());
  CHECK(stats.frequencies_pass);
  for (size_t i = 0; i < stats.ks.size(); ++i) {
    double expected = std::pow(0.5, static_cast<double>(plan.teams[stats.ks[i]].b));
    CHECK(std::abs(stats.frequencies[i].estimate - expected) <= 0.02);
  }
  CHECK(stats.max_abs_correlation <= 0.05);
}

TEST_CASE("density targets: sure inequalities hold across runs of a 3/4 plan") {
  TeamPlan plan = generate_plan(Rational(3, 4), 7);
  uint64_t n = plan.teams[6].n;
  DensityTargetsReport rep = verify_density_targets(plan, n, 20, 37);
  CHECK(rep.sure_pass);
  CHECK(rep.checked_teams >= 4);
  // Gamble successes happened a plausible number of times (p >= 1/4 per team
  // at b <= 2 over 20 runs).
  uint64_t total_events = 0;
  for (uint64_t c : rep.event_counts) total_events += c;
  CHECK(total_events > 0);
}

TEST_CASE("alternating plans also clear their sure checks") {
  TeamPlan plan = generate_alternating_plan(Rational(1, 4), Rational(3, 4), 6);
  uint64_t n = plan.teams[5].n;
  DensityTargetsReport rep = verify_density_targets(plan, n, 10, 41);
  CAPTURE(rep.sample_violations.empty() ? "" : rep.sample_violations[0]);
  CHECK(rep.sure_pass);
}

TEST_CASE("a point mass at (1/2, 1/2) always dispatches the pairs strategy") {
  StrategySpec s;
  s.kind = "mixed";
  s.params = {{"mu", nlohmann::json::array({{{"l", "1/2"}, {"u", "1/2"}, {"w", "1"}}})}};
  auto rule = s.build();
  auto* mixed = dynamic_cast<MixedStrategy*>(rule.get());
  REQUIRE(mixed != nullptr);
  CHECK(mixed->rule_for(0).name() == "pairs");
  for (uint64_t t = 0; t < 50; ++t)
    CHECK(mixed->dispatch_for_run(RandomSource::for_run(3, t)) == 0);
}

TEST_CASE("mixed strategy dispatch: frequencies track the law") {
  StrategySpec s = StrategySpec::preset("mixed");
  s.params["teams"] = 4;
  auto rule = s.build();
  auto* mixed = dynamic_cast<MixedStrategy*>(rule.get());
  REQUIRE(mixed != nullptr);
  uint64_t first = 0;
  const uint64_t trials = 4000;
  for (uint64_t t = 0; t < trials; ++t)
    first += mixed->dispatch_for_run(RandomSource::for_run(43, t)) == 0;
  double freq = static_cast<double>(first) / trials;
  CHECK(std::abs(freq - 0.5) < 0.05);
}

TEST_CASE("mixed runs scatter the chosen strategy over the active players") {
  StrategySpec s = StrategySpec::preset("mixed");
  s.params["teams"] = 4;
  s.params["noise_bits"] = 10;
  auto rule = s.build();
  RandomSource rng = RandomSource::for_run(47, 1);
  RunArtifacts art;
  OutcomeTrajectory traj = simulate_run(*rule, 5000, rng, &art);
  REQUIRE(art.dispatch.has_value());
  // Inactive players guess black: they are correct exactly on black hats.
  uint64_t h = rule->horizon(5000);
  HatAssignment hats = sample_assignment(ColorSpace::binary(), h, rng);
  for (uint64_t q = 1; q * q <= 5000; ++q)
    CHECK(traj.correct(q * q) == (hats.bit(q * q) == false));
}

TEST_CASE("explicit finite block schedules simulate up to their last block") {
  StrategySpec s;
  s.kind = "block";
  s.params = {{"ends", std::vector<uint64_t>{2, 6, 24}}};
  auto rule = s.build();
  RunReport rep = run_and_report(*rule, 24, 61, 0, 4);
  CHECK(rep.n == 24);
  // Block-end checkpoints are recorded for all three blocks.
  uint64_t marks_at_ends = 0;
  for (const auto& cp : rep.checkpoints)
    marks_at_ends += cp.k == 2 || cp.k == 6 || cp.k == 24;
  CHECK(marks_at_ends == 3);
}

TEST_CASE("run reports serialize to JSON-lines entries") {
  PairsStrategy pairs;
  RunReport rep = run_and_report(pairs, 1000, 53, 2, 100);
  nlohmann::json j = rep.to_json(true);
  CHECK(j.at("run") == 2);
  CHECK(j.at("n") == 1000);
  CHECK(j.at("sure_pass") == true);
  CHECK(j.at("zbar").at("num") == "1");
  CHECK(j.at("zbar").at("den") == "2");
  CHECK(j.contains("checkpoints"));
}

TEST_CASE("parallel runs merge deterministically") {
  PairsStrategy pairs;
  std::vector<RunReport> seq = run_many(pairs, 2000, 6, 59, 100, 1);
  std::vector<RunReport> par = run_many(pairs, 2000, 6, 59, 100, 2);
  REQUIRE(seq.size() == par.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].zbar == par[i].zbar);
    CHECK(seq[i].lower_hat == par[i].lower_hat);
    CHECK(seq[i].upper_hat == par[i].upper_hat);
  }
}

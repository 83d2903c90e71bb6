#include "hats/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include "hats/color_games.hpp"
#include "hats/exact.hpp"
#include "hats/mixed_strategy.hpp"
#include "hats/simulate.hpp"
#include "hats/strategies.hpp"
#include "hats/team_strategy.hpp"

namespace hats {

namespace {

const Rational kHalf(1, 2);

uint64_t sub_seed(uint64_t seed, uint64_t tag) {
  return splitmix64_mix(seed ^ (tag * 0x9E3779B97F4A7C15ULL));
}

std::string fixed6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct CatalogEntry {
  std::string label;
  std::unique_ptr<GuessRule> rule;
  uint64_t k_min = 100;
};

std::unique_ptr<GuessRule> team_rule(const std::string& u, uint64_t teams,
                                     const std::string& eps, const std::string& mode = "win",
                                     const std::string& l = "") {
  StrategySpec s;
  s.kind = "team";
  s.params = {{"u", u}, {"teams", teams}, {"eps", eps}, {"mode", mode}};
  if (!l.empty()) s.params["l"] = l;
  return s.build();
}

std::unique_ptr<GuessRule> mixed_rule(unsigned noise_bits, uint64_t teams) {
  StrategySpec s = StrategySpec::preset("mixed");
  s.params["noise_bits"] = noise_bits;
  s.params["teams"] = teams;
  return s.build();
}

std::unique_ptr<GuessRule> mixed_pointmass_rule() {
  StrategySpec s;
  s.kind = "mixed";
  s.params = {{"mu", nlohmann::json::array({{{"l", "1/2"}, {"u", "1/2"}, {"w", "1"}}})}};
  return s.build();
}

// The binary library strategies used by the window-level exact checks and
// the adversarial search.
std::vector<CatalogEntry> window_catalog() {
  std::vector<CatalogEntry> cat;
  cat.push_back({"constant-0", StrategySpec::preset("constant").build()});
  cat.push_back({"constant-1", StrategySpec::preset("constant-1").build()});
  cat.push_back({"random", StrategySpec::preset("random").build()});
  cat.push_back({"even-odd-4", StrategySpec::preset("even-odd-4").build()});
  cat.push_back({"even-odd-8", StrategySpec::preset("even-odd-8").build()});
  cat.push_back({"pairs", StrategySpec::preset("pairs").build()});
  cat.push_back({"block-powers2", StrategySpec::preset("block-powers2").build()});
  cat.push_back({"team-3:4", team_rule("3/4", 4, "harmonic")});
  cat.push_back({"alternating-1:4-3:4", team_rule("3/4", 4, "harmonic", "alternating", "1/4")});
  cat.push_back({"mixed", mixed_rule(/*noise_bits=*/10, /*teams=*/4)});
  return cat;
}

// --- criterion 1: exact finite-game laws -------------------------------

CriterionResult criterion_exact_finite() {
  CriterionResult c{"1", "exact finite games: all-or-nothing parity, sure pairs, mean 1/2"};
  for (uint64_t n = 2; n <= 6; ++n) {
    EvenOddGroupsStrategy eo(n);
    ExactDistribution d = exact_distribution(eo, n);
    d.validate(n);
    c.check(d.p_exactly(Rational(1)) == kHalf,
            "even-odd n=" + std::to_string(n) + ": P(all correct) = " +
                d.p_exactly(Rational(1)).str());
    c.check(d.p_exactly(Rational(0)) == kHalf,
            "even-odd n=" + std::to_string(n) + ": P(all wrong) = " +
                d.p_exactly(Rational(0)).str());
  }
  for (uint64_t n = 2; n <= 6; n += 2) {
    PairsStrategy pairs;
    ExactDistribution d = exact_distribution(pairs, n);
    bool sure_half = d.pmf.size() == 1 && d.pmf[0].first == kHalf && d.pmf[0].second == Rational(1);
    c.check(sure_half, "pairs n=" + std::to_string(n) + ": mean is 1/2 surely");
  }

  const uint64_t n = 6;
  std::vector<CatalogEntry> cat;
  cat.push_back({"constant-0", StrategySpec::preset("constant").build()});
  cat.push_back({"constant-1", StrategySpec::preset("constant-1").build()});
  cat.push_back({"random", StrategySpec::preset("random").build()});
  cat.push_back({"even-odd-4", StrategySpec::preset("even-odd-4").build()});
  cat.push_back({"even-odd-6", std::make_unique<EvenOddGroupsStrategy>(6)});
  cat.push_back({"pairs", StrategySpec::preset("pairs").build()});
  {
    StrategySpec s;
    s.kind = "block";
    s.params = {{"ends", std::vector<uint64_t>{2, 6, 24}}};
    cat.push_back({"block-2-6-24", s.build()});
  }
  cat.push_back({"block-powers2", StrategySpec::preset("block-powers2").build()});
  cat.push_back({"team-3:4", team_rule("3/4", 4, "harmonic")});
  cat.push_back({"alternating-1:4-3:4", team_rule("3/4", 4, "harmonic", "alternating", "1/4")});
  cat.push_back({"mixed", mixed_rule(10, 4)});
  for (const auto& entry : cat) {
    Rational mean = exact_mean(*entry.rule, n);
    c.check(mean == kHalf, entry.label + ": exact mean at n=6 is " + mean.str());
  }
  return c;
}

// --- criterion 2: sharpness of the finite bounds by search --------------

CriterionResult criterion_search() {
  CriterionResult c{"2", "optimal-strategy search: max P(all correct) and max guaranteed fraction"};
  for (uint32_t n = 2; n <= 3; ++n) {
    SearchResult all = search_strategy_space(n, SearchObjective::MaxAllCorrect);
    c.check(all.optimum == kHalf, "n=" + std::to_string(n) + ": max P(all correct) = " +
                                      all.optimum.str() + " over " +
                                      std::to_string(all.strategies_enumerated) + " strategies");
    // The witness must attain the optimum.
    uint64_t hits = 0;
    for (uint32_t a = 0; a < (1u << n); ++a)
      hits += all.witness.correct_count(a) == n;
    c.check(Rational::ratio(hits, 1u << n) == all.optimum,
            "n=" + std::to_string(n) + ": all-correct witness attains the optimum");

    SearchResult guar = search_strategy_space(n, SearchObjective::MaxGuaranteedFraction);
    c.check(guar.optimum <= kHalf, "n=" + std::to_string(n) + ": max guaranteed fraction = " +
                                       guar.optimum.str() + " <= 1/2");
    uint32_t min_correct = n;
    for (uint32_t a = 0; a < (1u << n); ++a)
      min_correct = std::min(min_correct, guar.witness.correct_count(a));
    c.check(Rational::ratio(min_correct, n) == guar.optimum,
            "n=" + std::to_string(n) + ": guaranteed-fraction witness attains the optimum");

    // Cross-check the reduction route against the exhaustive one.
    c.check(search_strategy_space_reduction(n, SearchObjective::MaxAllCorrect).optimum ==
                all.optimum,
            "n=" + std::to_string(n) + ": independent-set route agrees");
    c.check(search_strategy_space_reduction(n, SearchObjective::MaxGuaranteedFraction).optimum ==
                guar.optimum,
            "n=" + std::to_string(n) + ": orientation route agrees");
  }
  c.check(search_strategy_space(2, SearchObjective::MaxGuaranteedFraction).optimum == kHalf,
          "n=2: the pairs value 1/2 is guaranteed-optimal");
  SearchResult four = search_strategy_space(4, SearchObjective::MaxAllCorrect);
  c.check(four.optimum == kHalf, "n=4 (reduction): max P(all correct) = " + four.optimum.str());
  SearchResult four_g = search_strategy_space(4, SearchObjective::MaxGuaranteedFraction);
  c.check(four_g.optimum == kHalf,
          "n=4 (reduction): max guaranteed fraction = " + four_g.optimum.str());
  return c;
}

// --- criterion 3: conditional correctness is exactly 1/K ---------------

CriterionResult criterion_independence() {
  CriterionResult c{"3", "independence: conditional correct-probability exactly 1/K per window"};
  std::vector<CatalogEntry> cat = window_catalog();
  cat.push_back({"mod2-groups", std::make_unique<ModKGroupsStrategy>(2)});
  cat.push_back({"mod3-groups", std::make_unique<ModKGroupsStrategy>(3)});
  uint64_t pairs_checked = 0;
  for (const auto& entry : cat) {
    for (uint64_t i = 1; i <= 8; ++i) {
      if (entry.rule->window(i).size() > 12) continue;
      IndependenceReport rep = verify_independence(*entry.rule, 8, i);
      ++pairs_checked;
      if (!rep.pass)
        c.check(false, entry.label + " player " + std::to_string(i) + ": " + rep.violation);
      Rational p = exact_correct_probability(*entry.rule, 8, i);
      Rational expected = Rational::ratio(1, entry.rule->space().colors_for(i));
      if (p != expected)
        c.check(false, entry.label + " player " + std::to_string(i) +
                           ": marginal correct-probability " + p.str());
    }
  }
  c.check(pairs_checked >= 80, "checked " + std::to_string(pairs_checked) +
                                   " (strategy, player) pairs, all conditionals exactly 1/K");
  return c;
}

// --- criterion 4: adversarial all-black-tail search ----------------------

CriterionResult criterion_adversarial(uint64_t seed) {
  CriterionResult c{"4", "adversarial search: some all-black-tail prefix forces >= n/2 wrong"};
  RandomSource rng(sub_seed(seed, 4));
  for (const auto& entry : window_catalog()) {
    AdversarialSearchResult res = adversarial_tail_black_search(*entry.rule, 8, rng);
    c.check(res.wrong_count >= 4, entry.label + ": worst prefix forces " +
                                      std::to_string(res.wrong_count) + " wrong guesses");
    c.check(res.average_wrong == Rational(4),
            entry.label + ": average wrong count over all prefixes = " + res.average_wrong.str());
  }
  {
    PairsStrategy pairs;
    AdversarialSearchResult res = adversarial_tail_black_search(pairs, 8, rng);
    c.check(res.wrong_count == 4, "pairs: exactly 4 wrong on every prefix");
    EvenOddGroupsStrategy eo(8);
    res = adversarial_tail_black_search(eo, 8, rng);
    c.check(res.wrong_count == 8, "even-odd-8: an odd-parity prefix makes all 8 wrong");
  }
  return c;
}

// --- criterion 5: finite-horizon window proxy for the density bounds -----

CriterionResult criterion_theorem_main(uint64_t seed, unsigned jobs) {
  CriterionResult c{"5", "density window proxy: min <= 0.52 and max >= 0.48 in every run"};
  std::vector<CatalogEntry> cat;
  cat.push_back({"constant-0", StrategySpec::preset("constant").build()});
  cat.push_back({"random", StrategySpec::preset("random").build()});
  cat.push_back({"even-odd-4", StrategySpec::preset("even-odd-4").build()});
  cat.push_back({"even-odd-8", StrategySpec::preset("even-odd-8").build()});
  cat.push_back({"pairs", StrategySpec::preset("pairs").build()});
  // The growing-block strategy resolves all-or-nothing per block; k_min = 2
  // puts all 16 in-horizon blocks inside the window so that a window with no
  // single block loss (or no win) has probability 2 * 2^-16 per run.
  cat.push_back({"block-powers2", StrategySpec::preset("block-powers2").build(), 2});
  cat.push_back({"team-2:3", team_rule("2/3", 4, "dyadic")});
  cat.push_back({"team-3:4", team_rule("3/4", 4, "dyadic")});
  cat.push_back({"team-9:10", team_rule("9/10", 4, "dyadic")});
  cat.push_back({"team-1", team_rule("1", 4, "dyadic")});
  cat.push_back({"alternating-1:4-3:4", team_rule("3/4", 4, "dyadic", "alternating", "1/4")});
  cat.push_back({"mixed-pointmass", mixed_pointmass_rule()});
  cat.push_back({"mixed-two-point", mixed_rule(53, 6)});

  const uint64_t n = 100000, runs = 100;
  for (const auto& entry : cat) {
    TheoremMainReport rep =
        verify_theorem_main(*entry.rule, n, runs, 0.02, sub_seed(seed, 5), entry.k_min, jobs);
    c.check(rep.pass, entry.label + ": " + std::to_string(rep.runs) + " runs at N=" +
                          std::to_string(rep.n) +
                          (rep.pass ? " all inside the window" : " FAILED: " + rep.detail));
  }
  return c;
}

// --- criterion 6: growing blocks reach extreme densities -----------------

CriterionResult criterion_blocks(uint64_t seed, unsigned jobs) {
  CriterionResult c{"6", "growing blocks: sure win bound, fair block events, extreme densities"};
  auto rule = StrategySpec::preset("block-decade").build();
  const uint64_t n = 10000000, runs = 200;
  std::vector<RunReport> reports = run_many(*rule, n, runs, sub_seed(seed, 6), 100, jobs);

  uint64_t sure_failures = 0, upper_hits = 0, lower_hits = 0;
  std::vector<uint64_t> win_counts;
  for (const auto& r : reports) {
    if (!r.sure_pass) ++sure_failures;
    if (r.upper_hat >= Rational(9, 10)) ++upper_hits;
    if (r.lower_hat <= Rational(1, 10)) ++lower_hits;
    if (win_counts.size() < r.events.size()) win_counts.resize(r.events.size(), 0);
    for (size_t j = 0; j < r.events.size(); ++j) win_counts[j] += r.events[j] ? 1 : 0;
  }
  c.check(sure_failures == 0,
          "sure win inequality held in every run (failures: " + std::to_string(sure_failures) +
              ")");

  // Block events at the dedicated parity sampler, 10^5 trials each.
  std::vector<FrequencyReport> freqs =
      block_event_frequencies(win_counts.size(), 100000, sub_seed(seed, 61), 0.02);
  bool all_within = true;
  for (const auto& f : freqs) all_within = all_within && f.within_tolerance;
  c.check(all_within, "block win frequency 0.5 +/- 0.02 for all " +
                          std::to_string(freqs.size()) + " blocks (10^5 parity samples)");

  // Cross-check the same events on the 200 full runs at a loose 99.999% gate.
  bool cross_ok = true;
  for (size_t j = 0; j < win_counts.size(); ++j) {
    double est = static_cast<double>(win_counts[j]) / runs;
    if (std::abs(est - 0.5) > 4.5 * std::sqrt(0.25 / runs)) cross_ok = false;
  }
  c.check(cross_ok, "full-run block win counts consistent with 1/2");

  uint64_t threshold = 188;  // (1 - 2^-5 - 0.03) * 200 runs, rounded up
  c.check(upper_hits >= threshold, "runs with window max >= 0.9: " + std::to_string(upper_hits) +
                                       "/200 (need >= 188)");
  c.check(lower_hits >= threshold, "runs with window min <= 0.1: " + std::to_string(lower_hits) +
                                       "/200 (need >= 188)");
  return c;
}

// --- criterion 7: team plans ---------------------------------------------

CriterionResult criterion_teams(uint64_t seed, unsigned jobs) {
  CriterionResult c{"7", "team plans: validation, sure inequalities, event statistics"};
  const std::vector<std::string> targets{"2/3", "3/4", "9/10", "1"};
  for (size_t ti = 0; ti < targets.size(); ++ti) {
    const std::string& u = targets[ti];
    TeamPlan plan = generate_plan(Rational::parse(u), 12, TeamMode::Win, {.eps = "harmonic"});
    PlanValidation validation = validate_plan(plan);
    c.check(validation.pass, "u=" + u + ": 12-team plan passes the independent checker (" +
                                 std::to_string(validation.checks.size()) + " checks)" +
                                 (validation.pass ? "" : ": " + validation.first_violation));

    // Simulate to the last team start below the size cap.
    uint64_t n = 0, teams_covered = 0;
    for (const auto& t : plan.teams) {
      if (t.end() <= 12000000) {
        n = t.end();
        teams_covered = t.k + 1;
      }
    }
    DensityTargetsReport rep =
        verify_density_targets(plan, n, 200, sub_seed(seed, 7 + ti), jobs);
    c.check(rep.sure_pass,
            "u=" + u + ": sure inequalities exact on 200 runs over " +
                std::to_string(teams_covered) + " teams, N=" + std::to_string(n) +
                (rep.sure_pass ? "" : " FIRST: " + (rep.sample_violations.empty()
                                                        ? std::string("?")
                                                        : rep.sample_violations[0])));
    c.check(teams_covered >= 8, "u=" + u + ": simulation covers " +
                                    std::to_string(teams_covered) + " teams (need >= 8)");

    TeamEventStats stats =
        team_event_stats(plan, teams_covered - 1, 100000, sub_seed(seed, 70 + ti), 0.02);
    c.check(stats.frequencies_pass,
            "u=" + u + ": gamble-success frequency within 2^-b +/- 0.02 for " +
                std::to_string(stats.frequencies.size()) + " teams (10^5 samples)");
    c.check(stats.max_abs_correlation <= 0.03,
            "u=" + u + ": max |pairwise correlation| = " + fixed6(stats.max_abs_correlation) +
                " <= 0.03");

    // Cross-check the event counts observed on the full runs.
    bool cross_ok = true;
    for (const auto& t : plan.teams) {
      if (t.k == 0 || t.k >= rep.event_counts.size() || t.end() > n) continue;
      double p = std::pow(0.5, static_cast<double>(t.b));
      double est = static_cast<double>(rep.event_counts[t.k]) / 200.0;
      if (std::abs(est - p) > 4.5 * std::sqrt(p * (1 - p) / 200.0) + 0.005) cross_ok = false;
    }
    c.check(cross_ok, "u=" + u + ": full-run event counts consistent with 2^-b");
  }
  return c;
}

// --- criterion 8: more colors --------------------------------------------

CriterionResult criterion_colors(uint64_t seed) {
  CriterionResult c{"8", "colors: mod-K laws, countable union bound, continuum all-wrong"};
  for (uint64_t k = 2; k <= 4; ++k) {
    uint64_t n = 2 * k;
    ModKSumStrategy sum(k, 0, n);
    ExactDistribution d = exact_distribution(sum, n);
    c.check(d.p_exactly(Rational(1)) == Rational::ratio(1, k),
            "mod-" + std::to_string(k) + " sum, n=" + std::to_string(n) +
                ": P(all correct) = " + d.p_exactly(Rational(1)).str());
    Rational mean = exact_mean(sum, n);
    c.check(mean == Rational::ratio(1, k),
            "mod-" + std::to_string(k) + " sum: exact mean = " + mean.str());
  }
  // Exactly one correct per group, exhaustively over two full groups.
  for (uint64_t k = 2; k <= 4; ++k) {
    ModKGroupsStrategy groups(k);
    ExactDistribution d = exact_distribution(groups, 2 * k);
    bool sure = d.pmf.size() == 1 && d.pmf[0].first == Rational::ratio(1, k);
    c.check(sure, "mod-" + std::to_string(k) + " groups: exactly 1/K correct, exhaustive n=" +
                      std::to_string(2 * k));
  }

  ColorSpace space = union_bound_color_space(1, 10);
  // K_i = ceil(10 * 2^(i+1)) >= 10 * 2^(i+1), so the tail beyond i = 45 is at
  // most (1/10) * 2^-46; the exact head plus that bound covers every prefix.
  Rational head = union_bound_partial_sum(space, 45);
  Rational tail_bound = Rational(1, 10) * Rational::dyadic(46);
  c.check(head + tail_bound < Rational(1, 10),
          "countable ranges: exact sum of 1/K_i over all prefixes stays below 1/10 (head " +
              head.str() + ")");

  CountableUniformGuess guesser(space);
  const uint64_t runs = 10000, players = 30;
  uint64_t runs_with_any_correct = 0;
  for (uint64_t run = 0; run < runs; ++run) {
    RandomSource rng = RandomSource::for_run(sub_seed(seed, 8), run);
    HatAssignment hats = sample_assignment(space, players, rng);
    bool any = false;
    for (uint64_t i = 1; i <= players && !any; ++i)
      any = guesser.guess(i, hats, rng) == hats.color(i);
    runs_with_any_correct += any;
  }
  double freq = static_cast<double>(runs_with_any_correct) / runs;
  c.check(freq < 0.1, "countable ranges: fraction of runs with any correct guess = " +
                          fixed6(freq) + " < 0.1 (10^4 runs, 30 players)");

  // A positive-support guessing law keeps a nonzero chance against hats fixed
  // adversarially (the same color 3 everywhere).
  PositiveSupportGuess positive(powers_color_space());
  uint64_t correct = 0;
  std::vector<uint64_t> fixed_hats(players, 3);
  HatAssignment adversarial = HatAssignment::finite(powers_color_space(), fixed_hats);
  for (uint64_t run = 0; run < runs; ++run) {
    RandomSource rng = RandomSource::for_run(sub_seed(seed, 81), run);
    for (uint64_t i = 1; i <= players; ++i)
      correct += positive.guess(i, adversarial, rng) == 3;
  }
  c.check(correct > 0, "positive-support law: " + std::to_string(correct) +
                           " correct guesses against adversarially fixed hats");

  for (ContinuumRule rule : {ContinuumRule::MeanOfFirstTen, ContinuumRule::ConstantHalf}) {
    ContinuumReport rep = continuum_all_wrong_check(rule, 10000, 100, sub_seed(seed, 82));
    c.check(rep.correct_total == 0,
            std::string("continuum (") +
                (rule == ContinuumRule::MeanOfFirstTen ? "mean-of-10" : "constant") +
                "): 0 correct guesses in 10^4 runs x 100 players (got " +
                std::to_string(rep.correct_total) + ")");
  }
  bool rejected = false;
  try {
    continuum_all_wrong_check(ContinuumRule::ConstantHalf, 1, 1, 0, "pointmass");
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  c.check(rejected, "continuum: point-mass hat law rejected (atomless required)");
  return c;
}

// --- criterion 9: mixed-strategy dispatch --------------------------------

CriterionResult criterion_mixed(uint64_t seed) {
  CriterionResult c{"9", "mixed strategies: dispatch law and density-zero inactive set"};
  auto rule = mixed_rule(53, 6);
  auto* mixed = dynamic_cast<MixedStrategy*>(rule.get());
  const uint64_t trials = 10000;
  std::vector<uint64_t> counts(mixed->support().size(), 0);
  for (uint64_t t = 0; t < trials; ++t)
    counts[mixed->dispatch_for_run(RandomSource::for_run(sub_seed(seed, 9), t))] += 1;
  for (size_t m = 0; m < counts.size(); ++m) {
    FrequencyReport rep = frequency_report(
        "dispatch " + std::to_string(m), counts[m], trials,
        mixed->support()[m].weight.to_double(), 0.02);
    c.check(rep.within_tolerance, rep.event + ": frequency " + fixed6(rep.estimate) +
                                      " within 0.02 of " + fixed6(rep.target));
  }

  // Deterministic inverse-CDF map: first noise bit 0 (then ones) lands below
  // the 1/2 threshold, so the first support point (targets 0 and 1) is chosen.
  {
    uint64_t h = static_cast<uint64_t>(53) * 53;
    BitVec bits(h);
    for (uint64_t t = 2; t <= 53; ++t) bits.set(t * t - 1, true);
    HatAssignment hats = HatAssignment::binary(std::move(bits), Tail::ConstantBlack);
    size_t m = mixed->dispatch_index(hats);
    bool ok = m == 0 && mixed->support()[0].l == Rational(0) &&
              mixed->support()[0].u == Rational(1);
    c.check(ok, "noise 0111...: dispatches the (0, 1) targets");
  }

  uint64_t inactive = MixedStrategy::inactive_count_upto(1000000);
  uint64_t counted = 0;
  for (uint64_t p = 1; p <= 1000000; ++p) counted += MixedStrategy::is_inactive(p);
  c.check(inactive == 1000 && counted == inactive,
          "inactive players up to 10^6: " + std::to_string(counted) + " = floor(sqrt(N))");
  return c;
}

}  // namespace

void CriterionResult::check(bool ok, const std::string& line) {
  pass = pass && ok;
  lines.push_back(std::string("  [") + (ok ? "ok" : "FAIL") + "] " + line);
}

std::vector<CriterionResult> run_suite(const std::string& suite, uint64_t seed, unsigned jobs) {
  std::vector<CriterionResult> out;
  bool all = suite == "all";
  if (all || suite == "finite") {
    out.push_back(criterion_exact_finite());
    out.push_back(criterion_search());
    out.push_back(criterion_independence());
    out.push_back(criterion_adversarial(seed));
  }
  if (all || suite == "infinite") {
    out.push_back(criterion_theorem_main(seed, jobs));
    out.push_back(criterion_blocks(seed, jobs));
  }
  if (all || suite == "appendix") out.push_back(criterion_teams(seed, jobs));
  if (all || suite == "colors") out.push_back(criterion_colors(seed));
  if (all || suite == "appendix") out.push_back(criterion_mixed(seed));
  if (out.empty())
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (finite, infinite, appendix, colors, all)");
  return out;
}

std::string render_results(const std::vector<CriterionResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += (r.pass ? "PASS" : "FAIL");
    out += " criterion-" + r.id + " " + r.name + "\n";
    for (const auto& line : r.lines) out += line + "\n";
  }
  return out;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace hats

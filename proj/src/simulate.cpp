#include "hats/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "hats/json_util.hpp"
#include "hats/mixed_strategy.hpp"
#include "hats/strategies.hpp"
#include "hats/team_strategy.hpp"

namespace hats {

namespace {

std::vector<Checkpoint> make_checkpoints(const GuessRule& rule, uint64_t n, const BitVec& correct) {
  std::vector<uint64_t> marks = rule.checkpoint_marks(n);
  for (uint64_t k = 100; k < n; k = k + std::max<uint64_t>(1, k / 4)) marks.push_back(k);
  marks.push_back(n);
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  std::vector<Checkpoint> cps;
  uint64_t count = 0, at = 0;
  for (uint64_t k : marks) {
    if (k < 1 || k > n) continue;
    while (at < k) count += correct.get(at++) ? 1 : 0;
    cps.push_back({k, count});
  }
  return cps;
}

}  // namespace

OutcomeTrajectory simulate_run(const GuessRule& rule, uint64_t n, const RandomSource& rng,
                               RunArtifacts* art) {
  uint64_t h = rule.horizon(n);
  HatAssignment hats = sample_assignment(rule.space(), static_cast<int64_t>(h), rng);
  BitVec correct;
  rule.evaluate(hats, n, rng, correct, art);
  std::vector<Checkpoint> cps = make_checkpoints(rule, n, correct);
  return OutcomeTrajectory(std::move(correct), std::move(cps));
}

nlohmann::json RunReport::to_json(bool include_checkpoints) const {
  nlohmann::json j{{"run", run},
                   {"n", n},
                   {"zbar", rational_json(zbar)},
                   {"lower_hat", rational_json(lower_hat)},
                   {"upper_hat", rational_json(upper_hat)},
                   {"k_min", k_min},
                   {"sure_pass", sure_pass},
                   {"violations", violations}};
  if (dispatch) j["dispatch"] = *dispatch;
  if (!events.empty()) {
    nlohmann::json ev = nlohmann::json::array();
    for (uint8_t e : events) ev.push_back(e != 0);
    j["events"] = ev;
  }
  if (include_checkpoints) {
    nlohmann::json cps = nlohmann::json::array();
    for (const auto& c : checkpoints) cps.push_back({c.k, c.correct});
    j["checkpoints"] = cps;
  }
  return j;
}

void apply_sure_checks(const GuessRule& rule, const OutcomeTrajectory& traj,
                       const RunArtifacts& art, RunReport& report) {
  auto fail = [&](const std::string& msg) {
    report.sure_pass = false;
    report.violations.push_back(msg);
  };

  if (auto* pairs = dynamic_cast<const PairsStrategy*>(&rule)) {
    (void)pairs;
    for (uint64_t k = 2; k <= traj.players(); k += 2) {
      if (traj.correct_prefix_count(k) * 2 != k) {
        fail("pairs: mean at k=" + std::to_string(k) + " is not exactly 1/2");
        break;
      }
    }
    return;
  }
  if (auto* groups = dynamic_cast<const ModKGroupsStrategy*>(&rule)) {
    uint64_t k = groups->space().colors_for(1);
    for (uint64_t m = 1; m * k <= traj.players(); ++m) {
      if (traj.correct_prefix_count(m * k) != m) {
        fail("mod-k groups: group " + std::to_string(m) + " does not have exactly one correct");
        break;
      }
    }
    return;
  }
  if (auto* block = dynamic_cast<const BlockStrategy*>(&rule)) {
    const BlockSchedule& sched = block->schedule();
    report.events = art.block_win;
    for (size_t j = 1; j <= art.block_win.size(); ++j) {
      uint64_t end = sched.end(j);
      if (end > traj.players()) break;
      if (!art.block_win[j - 1]) continue;
      // On a win, at most n_{j-1} of the first n_j players are wrong.
      uint64_t count = traj.correct_prefix_count(end);
      if (count < end - sched.end(j - 1))
        fail("block " + std::to_string(j) + ": win but mean below 1 - n_{j-1}/n_j");
    }
    return;
  }
  if (auto* team = dynamic_cast<const TeamStrategy*>(&rule)) {
    report.events = art.team_event;
    TeamRunCheck check = check_team_sure_bounds(team->plan(), traj, art);
    if (!check.pass) {
      report.sure_pass = false;
      for (const auto& v : check.violations) report.violations.push_back(v);
    }
    return;
  }
  if (dynamic_cast<const MixedStrategy*>(&rule)) {
    report.dispatch = art.dispatch;
    return;
  }
}

RunReport run_and_report(const GuessRule& rule, uint64_t n, uint64_t seed, uint64_t run_index,
                         uint64_t k_min) {
  RandomSource rng = RandomSource::for_run(seed, run_index);
  RunArtifacts art;
  OutcomeTrajectory traj = simulate_run(rule, n, rng, &art);
  RunReport rep;
  rep.run = run_index;
  rep.n = n;
  rep.zbar = traj.prefix_mean(n);
  if (n < 2) throw std::invalid_argument("run_and_report: need at least two players");
  DensityEstimate d = density_estimate(traj, std::min(k_min, n - 1));
  rep.lower_hat = d.lower_hat;
  rep.upper_hat = d.upper_hat;
  rep.k_min = d.k_min;
  rep.checkpoints = traj.checkpoints();
  if (art.dispatch) rep.dispatch = art.dispatch;
  apply_sure_checks(rule, traj, art, rep);
  return rep;
}

std::vector<RunReport> run_many(const GuessRule& rule, uint64_t n, uint64_t runs, uint64_t seed,
                                uint64_t k_min, unsigned jobs) {
  std::vector<RunReport> reports(runs);
  if (jobs <= 1 || runs <= 1) {
    for (uint64_t r = 0; r < runs; ++r) reports[r] = run_and_report(rule, n, seed, r, k_min);
    return reports;
  }
  unsigned workers = std::min<unsigned>(jobs, std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  std::vector<std::future<void>> futures;
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w]() {
      for (uint64_t r = w; r < runs; r += workers)
        reports[r] = run_and_report(rule, n, seed, r, k_min);
    }));
  }
  for (auto& f : futures) f.get();
  return reports;
}

nlohmann::json TheoremMainReport::to_json() const {
  return {{"runs", runs}, {"n", n},       {"tol", tol},
          {"pass", pass}, {"failures", failures}, {"detail", detail}};
}

TheoremMainReport verify_theorem_main(const GuessRule& rule, uint64_t n, uint64_t runs,
                                      double tol, uint64_t seed, uint64_t k_min, unsigned jobs) {
  TheoremMainReport rep;
  rep.runs = runs;
  rep.n = n;
  rep.tol = tol;
  // tol enters exactly, as a rational.
  Rational rtol = Rational::parse(std::to_string(static_cast<long>(std::lround(tol * 10000)))) /
                  Rational(10000);
  Rational lo_limit = Rational(1, 2) + rtol;  // window minimum must be <= this
  Rational hi_limit = Rational(1, 2) - rtol;  // window maximum must be >= this
  std::vector<RunReport> reports = run_many(rule, n, runs, seed, k_min, jobs);
  for (const auto& r : reports) {
    bool ok = r.lower_hat <= lo_limit && r.upper_hat >= hi_limit;
    if (!ok) {
      ++rep.failures;
      rep.pass = false;
      if (rep.detail.empty())
        rep.detail = "run " + std::to_string(r.run) + ": window min " + r.lower_hat.str() +
                     ", max " + r.upper_hat.str();
    }
    if (!r.sure_pass) {
      rep.pass = false;
      ++rep.failures;
      if (rep.detail.empty()) rep.detail = "run " + std::to_string(r.run) + ": sure check failed";
    }
  }
  return rep;
}

nlohmann::json FrequencyReport::to_json() const {
  char est[32], ci[32];
  std::snprintf(est, sizeof est, "%.6f", estimate);
  std::snprintf(ci, sizeof ci, "%.6f", ci99_halfwidth);
  return {{"event", event},           {"hits", hits},   {"trials", trials},
          {"estimate", std::string(est)}, {"target", target}, {"ci99", std::string(ci)},
          {"within_tolerance", within_tolerance}};
}

FrequencyReport frequency_report(const std::string& event, uint64_t hits, uint64_t trials,
                                 double target, double tolerance) {
  FrequencyReport rep;
  rep.event = event;
  rep.hits = hits;
  rep.trials = trials;
  rep.estimate = trials ? static_cast<double>(hits) / trials : 0.0;
  rep.target = target;
  double p = rep.estimate;
  rep.ci99_halfwidth = trials ? 2.576 * std::sqrt(std::max(p * (1 - p), 1e-12) / trials) : 1.0;
  rep.within_tolerance = std::abs(rep.estimate - target) <= tolerance;
  return rep;
}

std::vector<FrequencyReport> block_event_frequencies(size_t blocks, uint64_t trials,
                                                     uint64_t seed, double tolerance) {
  RandomSource rng(seed);
  std::vector<uint64_t> hits(blocks, 0);
  for (uint64_t t = 0; t < trials; ++t)
    for (size_t j = 0; j < blocks; ++j)
      hits[j] += rng.aux_bit(t * blocks + j) ? 0 : 1;  // even parity = win
  std::vector<FrequencyReport> out;
  for (size_t j = 0; j < blocks; ++j)
    out.push_back(frequency_report("block " + std::to_string(j + 1) + " win", hits[j], trials,
                                   0.5, tolerance));
  return out;
}

TeamEventStats team_event_stats(const TeamPlan& plan, size_t max_team, uint64_t trials,
                                uint64_t seed, double tolerance) {
  TeamEventStats stats;
  RandomSource rng(seed);
  std::vector<const TeamParams*> teams;
  for (const auto& t : plan.teams)
    if (t.k >= 1 && t.k <= max_team && t.s > 0) teams.push_back(&t);
  for (const auto* t : teams) stats.ks.push_back(t->k);

  std::vector<std::vector<uint8_t>> samples(teams.size(), std::vector<uint8_t>(trials, 0));
  std::vector<uint64_t> hits(teams.size(), 0);
  uint64_t stride = 0;
  for (const auto* t : teams) stride += t->b;
  for (uint64_t trial = 0; trial < trials; ++trial) {
    uint64_t offset = trial * stride;
    for (size_t ti = 0; ti < teams.size(); ++ti) {
      const TeamParams& t = *teams[ti];
      bool event = true;
      for (uint64_t j = 0; j < t.b; ++j) {
        bool odd = rng.aux_bit(offset + j);
        event = event && (odd == (t.mode == TeamMode::Lose));
      }
      offset += t.b;
      samples[ti][trial] = event;
      hits[ti] += event;
    }
  }

  for (size_t ti = 0; ti < teams.size(); ++ti) {
    double target = std::pow(0.5, static_cast<double>(teams[ti]->b));
    FrequencyReport rep =
        frequency_report("team " + std::to_string(teams[ti]->k) + " gamble success", hits[ti],
                         trials, target, tolerance);
    stats.frequencies_pass = stats.frequencies_pass && rep.within_tolerance;
    stats.frequencies.push_back(rep);
  }

  stats.correlations.assign(teams.size(), std::vector<double>(teams.size(), 0.0));
  for (size_t a = 0; a < teams.size(); ++a) {
    double pa = static_cast<double>(hits[a]) / trials;
    for (size_t b = a + 1; b < teams.size(); ++b) {
      double pb = static_cast<double>(hits[b]) / trials;
      uint64_t both = 0;
      for (uint64_t t = 0; t < trials; ++t) both += samples[a][t] & samples[b][t];
      double cov = static_cast<double>(both) / trials - pa * pb;
      double denom = std::sqrt(std::max(pa * (1 - pa), 1e-12) * std::max(pb * (1 - pb), 1e-12));
      double corr = cov / denom;
      stats.correlations[a][b] = stats.correlations[b][a] = corr;
      stats.max_abs_correlation = std::max(stats.max_abs_correlation, std::abs(corr));
    }
  }
  return stats;
}

nlohmann::json DensityTargetsReport::to_json() const {
  return {{"runs", runs},
          {"n", n},
          {"sure_pass", sure_pass},
          {"sure_failures", sure_failures},
          {"sample_violations", sample_violations},
          {"event_counts", event_counts},
          {"checked_teams", checked_teams}};
}

DensityTargetsReport verify_density_targets(const TeamPlan& plan, uint64_t n, uint64_t runs,
                                            uint64_t seed, unsigned jobs) {
  PlanValidation validation = validate_plan(plan);
  if (!validation.pass)
    throw std::invalid_argument("verify_density_targets: invalid plan: " +
                                validation.first_violation);
  TeamStrategy rule(plan);
  DensityTargetsReport rep;
  rep.runs = runs;
  rep.n = n;
  std::vector<RunReport> reports = run_many(rule, n, runs, seed, /*k_min=*/100, jobs);
  for (const auto& r : reports) {
    if (!r.sure_pass) {
      rep.sure_pass = false;
      ++rep.sure_failures;
      for (const auto& v : r.violations)
        if (rep.sample_violations.size() < 5) rep.sample_violations.push_back(v);
    }
    if (rep.event_counts.size() < r.events.size()) rep.event_counts.resize(r.events.size(), 0);
    for (size_t k = 0; k < r.events.size(); ++k) rep.event_counts[k] += r.events[k] ? 1 : 0;
  }
  for (const auto& t : plan.teams)
    if (t.k >= 1 && t.end() <= n) ++rep.checked_teams;
  return rep;
}

}  // namespace hats

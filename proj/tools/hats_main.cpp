// Command-line front end: exact analysis, optimal-strategy search, seeded
// simulation with JSON-lines reports, team-plan generation/validation, and
// the acceptance verification suites.

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "hats/exact.hpp"
#include "hats/json_util.hpp"
#include "hats/simulate.hpp"
#include "hats/strategies.hpp"
#include "hats/team_plan.hpp"
#include "hats/verify.hpp"

namespace {

std::unique_ptr<hats::GuessRule> build_strategy(const std::string& spec_arg, uint64_t game_n) {
  if (!spec_arg.empty() && (spec_arg[0] == '{' || spec_arg[0] == '@')) {
    if (spec_arg[0] == '{') return hats::StrategySpec::parse(spec_arg).build(game_n);
    std::ifstream in(spec_arg.substr(1));
    if (!in) throw std::runtime_error("cannot open strategy file " + spec_arg.substr(1));
    nlohmann::json j;
    in >> j;
    return hats::StrategySpec::from_json(j).build(game_n);
  }
  return hats::StrategySpec::preset(spec_arg).build(game_n);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hat-guessing strategies: exact analysis and seeded simulation"};
  app.require_subcommand(1);

  std::string strategy = "pairs", out_path, format = "json";
  uint64_t seed = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* exact = app.add_subcommand("exact", "exact distribution, mean and independence report");
  uint64_t exact_n = 4;
  exact->add_option("--strategy", strategy, "preset name, inline JSON, or @file");
  exact->add_option("--n", exact_n, "number of players")->check(CLI::PositiveNumber);
  exact->add_option("--out", out_path, "output path (default stdout)");
  exact->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* search = app.add_subcommand("search", "optimal-strategy search over all strategies");
  uint64_t search_n = 2;
  std::string objective = "all-correct";
  search->add_option("--n", search_n, "number of players (2-4)");
  search->add_option("--objective", objective, "all-correct or guaranteed-fraction")
      ->check(CLI::IsMember({"all-correct", "guaranteed-fraction"}));
  search->add_option("--out", out_path, "output path");

  auto* simulate = app.add_subcommand("simulate", "seeded simulation runs, JSON-lines reports");
  uint64_t sim_n = 100000, sim_runs = 10, k_min = 100;
  bool checkpoints = false;
  std::string checkpoints_csv;
  simulate->add_option("--strategy", strategy, "preset name, inline JSON, or @file");
  simulate->add_option("--N", sim_n, "players per run")->check(CLI::PositiveNumber);
  simulate->add_option("--runs", sim_runs, "independent runs")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "master seed (runs derive their own streams)");
  simulate->add_option("--k-min", k_min, "window start for the density estimates");
  simulate->add_option("--jobs", jobs, "parallel runs");
  simulate->add_flag("--checkpoints", checkpoints, "include checkpoint lists in the reports");
  simulate->add_option("--checkpoints-csv", checkpoints_csv,
                       "write checkpoint means as CSV rows run,k,numerator,denominator");
  simulate->add_option("--out", out_path, "output path");

  auto* plan = app.add_subcommand("plan", "generate a team plan with exact parameters");
  std::string plan_u = "3/4", plan_l, plan_mode = "win", plan_eps = "harmonic";
  uint64_t plan_teams = 10;
  bool plan_validate = false;
  plan->add_option("--u", plan_u, "upper density target in [1/2, 1], e.g. 3/4");
  plan->add_option("--l", plan_l, "lower density target (alternating plans)");
  plan->add_option("--teams", plan_teams, "number of teams")->check(CLI::PositiveNumber);
  plan->add_option("--mode", plan_mode, "win, lose, or alternating")
      ->check(CLI::IsMember({"win", "lose", "alternating"}));
  plan->add_option("--eps", plan_eps, "harmonic or dyadic");
  plan->add_flag("--validate", plan_validate, "run the independent constraint checker");
  plan->add_option("--out", out_path, "output path");

  auto* verify = app.add_subcommand("verify", "acceptance suites with machine-readable results");
  std::string suite = "all";
  verify->add_option("--suite", suite, "finite, infinite, appendix, colors, or all");
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--jobs", jobs, "parallel runs inside heavy criteria");
  verify->add_option("--out", out_path, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*exact) {
      auto rule = build_strategy(strategy, exact_n);
      hats::ExactDistribution dist = hats::exact_distribution(*rule, exact_n);
      if (format == "csv") {
        emit(dist.to_csv(), out_path);
      } else {
        nlohmann::json j{{"strategy", rule->name()},
                         {"n", exact_n},
                         {"distribution", dist.to_json()},
                         {"mean", hats::rational_json(dist.mean())}};
        nlohmann::json indep = nlohmann::json::array();
        for (uint64_t i = 1; i <= exact_n; ++i)
          indep.push_back(hats::verify_independence(*rule, exact_n, i).to_json());
        j["independence"] = indep;
        emit(j.dump(2) + "\n", out_path);
      }
      return 0;
    }
    if (*search) {
      hats::SearchObjective obj = objective == "all-correct"
                                      ? hats::SearchObjective::MaxAllCorrect
                                      : hats::SearchObjective::MaxGuaranteedFraction;
      hats::SearchResult res = hats::search_strategy_space(static_cast<uint32_t>(search_n), obj);
      nlohmann::json j{{"n", search_n},
                       {"objective", objective},
                       {"optimum", hats::rational_json(res.optimum)},
                       {"method", res.method},
                       {"strategies_enumerated", res.strategies_enumerated},
                       {"witness", res.witness.to_json()}};
      emit(j.dump(2) + "\n", out_path);
      return 0;
    }
    if (*simulate) {
      auto rule = build_strategy(strategy, sim_n);
      std::vector<hats::RunReport> reports =
          hats::run_many(*rule, sim_n, sim_runs, seed, k_min, jobs);
      std::string text;
      bool ok = true;
      for (const auto& r : reports) {
        text += r.to_json(checkpoints).dump() + "\n";
        ok = ok && r.sure_pass;
      }
      emit(text, out_path);
      if (!checkpoints_csv.empty()) {
        std::string csv = "run,k,zbar_numerator,zbar_denominator\n";
        for (const auto& r : reports) {
          for (const auto& cp : r.checkpoints) {
            hats::Rational z = hats::Rational::ratio(cp.correct, cp.k);
            csv += std::to_string(r.run) + "," + std::to_string(cp.k) + "," + z.num_str() + "," +
                   z.den_str() + "\n";
          }
        }
        emit(csv, checkpoints_csv);
      }
      return ok ? 0 : 1;
    }
    if (*plan) {
      hats::PlanOptions options;
      options.eps = plan_eps;
      hats::TeamPlan p;
      if (plan_mode == "alternating") {
        if (plan_l.empty()) throw std::runtime_error("alternating plans need --l");
        p = hats::generate_alternating_plan(hats::Rational::parse(plan_l),
                                            hats::Rational::parse(plan_u), plan_teams, options);
      } else {
        p = hats::generate_plan(hats::Rational::parse(plan_u), plan_teams,
                                plan_mode == "lose" ? hats::TeamMode::Lose : hats::TeamMode::Win,
                                options);
      }
      nlohmann::json j = p.to_json();
      bool ok = true;
      if (plan_validate) {
        hats::PlanValidation v = hats::validate_plan(p);
        j["validation"] = v.to_json();
        ok = v.pass;
      }
      emit(j.dump(2) + "\n", out_path);
      return ok ? 0 : 1;
    }
    if (*verify) {
      std::vector<hats::CriterionResult> results = hats::run_suite(suite, seed, jobs);
      emit(hats::render_results(results), out_path);
      return hats::all_pass(results) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

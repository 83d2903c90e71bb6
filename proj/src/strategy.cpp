#include "hats/strategy.hpp"

#include <stdexcept>

#include "hats/color_games.hpp"
#include "hats/json_util.hpp"
#include "hats/mixed_strategy.hpp"
#include "hats/strategies.hpp"
#include "hats/team_strategy.hpp"

namespace hats {

StrategySpec StrategySpec::from_json(const nlohmann::json& j) {
  StrategySpec s;
  s.kind = j.at("kind").get<std::string>();
  s.params = j.value("params", nlohmann::json::object());
  return s;
}

nlohmann::json StrategySpec::to_json() const {
  return {{"kind", kind}, {"params", params}};
}

StrategySpec StrategySpec::parse(const std::string& text) {
  return from_json(nlohmann::json::parse(text));
}

StrategySpec StrategySpec::preset(const std::string& name) {
  StrategySpec s;
  s.params = nlohmann::json::object();
  if (name == "constant" || name == "constant-0") {
    s.kind = "constant";
    s.params["color"] = 0;
  } else if (name == "constant-1") {
    s.kind = "constant";
    s.params["color"] = 1;
  } else if (name == "random") {
    s.kind = "random";
  } else if (name == "even-odd") {
    s.kind = "even-odd";  // group size defaults to the whole game
  } else if (name == "even-odd-4" || name == "even-odd-8") {
    s.kind = "even-odd";
    s.params["group"] = name == "even-odd-4" ? 4 : 8;
  } else if (name == "pairs") {
    s.kind = "pairs";
  } else if (name == "mod-k-sum") {
    s.kind = "mod-k-sum";
    s.params["k"] = 3;
    s.params["c"] = 0;
  } else if (name == "mod-k-groups") {
    s.kind = "mod-k-groups";
    s.params["k"] = 3;
  } else if (name == "block" || name == "block-powers2") {
    s.kind = "block";
    s.params["schedule"] = "powers2";
  } else if (name == "block-decade") {
    s.kind = "block";
    s.params["schedule"] = "decade";
  } else if (name == "block-diverging") {
    s.kind = "block";
    s.params["schedule"] = "diverging";
  } else if (name == "team") {
    s.kind = "team";
    s.params["u"] = "3/4";
    s.params["teams"] = 10;
  } else if (name == "alternating") {
    s.kind = "team";
    s.params["mode"] = "alternating";
    s.params["l"] = "1/4";
    s.params["u"] = "3/4";
    s.params["teams"] = 10;
  } else if (name == "mixed") {
    s.kind = "mixed";
    s.params["mu"] = nlohmann::json::array(
        {{{"l", "0"}, {"u", "1"}, {"w", "1/2"}}, {{"l", "1/2"}, {"u", "1/2"}, {"w", "1/2"}}});
  } else if (name == "countable-uniform") {
    s.kind = "countable-uniform";
    s.params["space"] = "union-bound";
    s.params["eps"] = "1/10";
  } else if (name == "positive-support") {
    s.kind = "positive-support";
    s.params["space"] = "powers";
  } else {
    throw std::invalid_argument("unknown strategy preset '" + name + "'");
  }
  return s;
}

namespace {

ColorSpace countable_space_from(const nlohmann::json& params) {
  std::string which = params.value("space", "powers");
  if (which == "powers") return powers_color_space();
  if (which == "union-bound") {
    Rational eps = Rational::parse(params.value("eps", std::string("1/10")));
    return union_bound_color_space(eps.num().get_ui(), eps.den().get_ui());
  }
  throw std::invalid_argument("unknown countable space '" + which + "'");
}

}  // namespace

std::unique_ptr<GuessRule> StrategySpec::build(uint64_t game_n) const {
  const nlohmann::json& p = params;
  if (kind == "constant") {
    uint64_t k = p.value("k", 2);
    return std::make_unique<ConstantStrategy>(p.value("color", 0), ColorSpace::finite(k));
  }
  if (kind == "random") {
    uint64_t k = p.value("k", 2);
    return std::make_unique<IndependentRandomStrategy>(ColorSpace::finite(k));
  }
  if (kind == "even-odd") {
    uint64_t group = p.value("group", 0);
    if (group == 0) group = game_n;
    if (group == 0)
      throw std::invalid_argument("even-odd: needs a group size (or a fixed game size)");
    return std::make_unique<EvenOddGroupsStrategy>(group);
  }
  if (kind == "pairs") return std::make_unique<PairsStrategy>();
  if (kind == "mod-k-sum") {
    uint64_t n = p.value("n", 0);
    if (n == 0) n = game_n;
    if (n == 0) throw std::invalid_argument("mod-k-sum: needs the game size");
    return std::make_unique<ModKSumStrategy>(p.value("k", 2), p.value("c", 0), n);
  }
  if (kind == "mod-k-groups") return std::make_unique<ModKGroupsStrategy>(p.value("k", 2));
  if (kind == "block") {
    if (p.contains("ends"))
      return std::make_unique<BlockStrategy>(
          BlockSchedule::explicit_ends(p.at("ends").get<std::vector<uint64_t>>()));
    return std::make_unique<BlockStrategy>(
        BlockSchedule::named(p.value("schedule", std::string("powers2"))));
  }
  if (kind == "team") {
    PlanOptions options;
    options.eps = p.value("eps", std::string("harmonic"));
    uint64_t teams = p.value("teams", 10);
    std::string mode = p.value("mode", std::string("win"));
    Rational u = rational_from_json(p.value("u", nlohmann::json("3/4")));
    if (mode == "alternating") {
      Rational l = rational_from_json(p.value("l", nlohmann::json("1/2")));
      TeamPlan plan = generate_alternating_plan(l, u, teams, options);
      if (plan.pairs_degenerate) return std::make_unique<PairsStrategy>();
      return std::make_unique<TeamStrategy>(std::move(plan));
    }
    if (p.contains("plan")) return std::make_unique<TeamStrategy>(TeamPlan::from_json(p.at("plan")));
    TeamPlan plan = generate_plan(u, teams, mode == "lose" ? TeamMode::Lose : TeamMode::Win, options);
    if (plan.pairs_degenerate) return std::make_unique<PairsStrategy>();
    return std::make_unique<TeamStrategy>(std::move(plan));
  }
  if (kind == "mixed") {
    std::vector<MixedSupportPoint> mu;
    for (const auto& pt : p.at("mu"))
      mu.push_back({rational_from_json(pt.at("l")), rational_from_json(pt.at("u")),
                    rational_from_json(pt.at("w"))});
    unsigned noise_bits = p.value("noise_bits", 53);
    uint64_t teams = p.value("teams", 8);
    PlanOptions options;
    options.eps = p.value("eps", std::string("dyadic"));
    return std::make_unique<MixedStrategy>(std::move(mu), noise_bits, teams, options);
  }
  if (kind == "countable-uniform")
    return std::make_unique<CountableUniformGuess>(countable_space_from(p));
  if (kind == "positive-support")
    return std::make_unique<PositiveSupportGuess>(countable_space_from(p));
  throw std::invalid_argument("unknown strategy kind '" + kind + "'");
}

}  // namespace hats

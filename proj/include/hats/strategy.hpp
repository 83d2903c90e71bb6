// Strategy interface: a guess rule assigns each player a guess computed from
// the other players' hats, with a declared finite visibility window.  The
// declared window makes truncated simulation exact and lets the analyzer
// enumerate conditional distributions exactly.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hats/core.hpp"
#include "hats/rational.hpp"

#include "json.hpp"

namespace hats {

// Exact distribution of one player's guess given the visible hats.
// Deterministic rules put all mass on a single color.
struct GuessDistribution {
  std::vector<std::pair<uint64_t, Rational>> mass;

  static GuessDistribution point(uint64_t c) { return {{{c, Rational(1)}}}; }
  static GuessDistribution uniform(uint64_t k) {
    GuessDistribution d;
    for (uint64_t c = 0; c < k; ++c) d.mass.push_back({c, Rational::ratio(1, k)});
    return d;
  }
  Rational mass_at(uint64_t c) const {
    for (const auto& [v, p] : mass)
      if (v == c) return p;
    return Rational(0);
  }
};

// Optional per-run internals surfaced by bulk evaluation, used by the
// verification layer (block outcomes, team events, mixed-strategy dispatch).
struct RunArtifacts {
  std::vector<uint8_t> block_win;     // block strategies: 1 if block j+1 all-correct
  std::vector<uint8_t> team_event;    // team strategies: 1 if A_k occurred (index k)
  std::optional<size_t> dispatch;     // mixed strategies: chosen support point
};

class GuessRule {
 public:
  virtual ~GuessRule() = default;

  virtual std::string name() const = 0;
  virtual ColorSpace space() const { return ColorSpace::binary(); }

  // Minimal hat prefix needed to evaluate the guesses of players 1..n.
  virtual uint64_t horizon(uint64_t n) const = 0;

  // Players whose hats player i reads; never contains i.
  virtual std::vector<uint64_t> window(uint64_t i) const = 0;

  // Guess of player i.  Must depend only on hats in window(i); rng is the
  // run's source and is used only by randomized rules (pure per (run, i)).
  virtual uint64_t guess(uint64_t i, const HatAssignment& hats, const RandomSource& rng) const = 0;

  // Exact law of guess(i) over the rule's internal randomness, given hats.
  virtual GuessDistribution guess_distribution(uint64_t i, const HatAssignment& hats) const {
    return GuessDistribution::point(guess(i, hats, RandomSource(0)));
  }

  // Correctness bits of players 1..n.  The default per-player loop is
  // overridden by strategies with linear-time bulk paths; the two paths are
  // cross-checked in tests.
  virtual void evaluate(const HatAssignment& hats, uint64_t n, const RandomSource& rng,
                        BitVec& correct, RunArtifacts* art = nullptr) const;

  // Checkpoint marks worth recording for this rule (block/team boundaries).
  virtual std::vector<uint64_t> checkpoint_marks(uint64_t /*n*/) const { return {}; }
};

// Declarative strategy description, serializable as {"kind": ..., "params": {...}}.
struct StrategySpec {
  std::string kind;
  nlohmann::json params;

  static StrategySpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  static StrategySpec parse(const std::string& text);

  // Named presets covering every strategy in the library.
  static StrategySpec preset(const std::string& name);

  // Builds the rule; game_n is the number of players for finite-game rules
  // (whole-game mod-K sums, even-odd with no explicit group size).
  std::unique_ptr<GuessRule> build(uint64_t game_n = 0) const;
};

}  // namespace hats

// Exhaustive exact analysis of finite games: distribution of the correct
// fraction under the uniform hat measure, per-player conditional correctness
// probabilities, optimal-strategy search, and the adversarial all-black-tail
// search.  All probabilities are exact rationals.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hats/strategy.hpp"

namespace hats {

struct ExactDistribution {
  // (value of the correct fraction, probability), sorted by value.
  std::vector<std::pair<Rational, Rational>> pmf;

  Rational mean() const;
  Rational p_exactly(const Rational& v) const;
  Rational p_at_least(const Rational& alpha) const;
  // Throws unless the probabilities sum to exactly 1 and values lie in [0,1].
  void validate(uint64_t n) const;

  nlohmann::json to_json() const;
  std::string to_csv() const;  // value, probability numerator, denominator
};

// Joint enumeration over all K^H hat prefixes (H = horizon(n)); requires a
// deterministic rule over a uniform finite color space and K^H <= 2^24.
ExactDistribution exact_distribution(const GuessRule& rule, uint64_t n);

// Exact P(player i guesses correctly), enumerating the player's declared
// window only (weighted by multiplicity), so it extends to rules whose joint
// space is out of reach.  Window sizes are capped at 2^20 configurations.
Rational exact_correct_probability(const GuessRule& rule, uint64_t n, uint64_t i);

// Exact E[fraction correct] = average of the per-player probabilities.
Rational exact_mean(const GuessRule& rule, uint64_t n);

struct IndependenceReport {
  uint64_t player = 0;
  uint64_t configs = 0;
  bool pass = true;
  std::string violation;  // first window configuration with a skewed conditional

  nlohmann::json to_json() const;
};

// Checks that, conditional on every configuration of the hats player i can
// see, the probability of a correct guess is exactly 1/K.
IndependenceReport verify_independence(const GuessRule& rule, uint64_t n, uint64_t i);

// Explicit per-player guess tables for an n-player binary game; the table of
// player i is indexed by the other players' hats (player order, low bit
// first).
struct FiniteStrategyTable {
  uint32_t n = 0;
  std::vector<uint32_t> tables;  // player i's table: bit c of tables[i]

  uint64_t config_of(uint32_t assignment, uint32_t player) const {  // player 0-based
    uint64_t low = assignment & ((1u << player) - 1);
    uint64_t high = assignment >> (player + 1);
    return low | (high << player);
  }
  bool guess_bit(uint32_t player, uint32_t assignment) const {
    return (tables[player] >> config_of(assignment, player)) & 1;
  }
  uint32_t correct_count(uint32_t assignment) const;

  std::unique_ptr<GuessRule> as_rule() const;
  nlohmann::json to_json() const;
};

enum class SearchObjective { MaxAllCorrect, MaxGuaranteedFraction };

struct SearchResult {
  Rational optimum;
  FiniteStrategyTable witness;
  uint64_t strategies_enumerated = 0;
  std::string method;
};

// Exact optimum over every legal strategy of the n-player binary game.
// n <= 3 enumerates all (2^(2^(n-1)))^n strategy tuples directly; n = 4 uses
// the edge-orientation reduction (each table entry orients one edge of the
// n-cube toward the assignment it makes correct), which is exhaustive over
// the reduced space.  Both routes are cross-checked against each other at
// n <= 3 in the tests.
SearchResult search_strategy_space(uint32_t n, SearchObjective objective);

// The reduction route alone (independent sets / orientations), exposed so the
// tests can cross-check it against the exhaustive route where both run.
SearchResult search_strategy_space_reduction(uint32_t n, SearchObjective objective);

struct AdversarialSearchResult {
  uint64_t wrong_count = 0;
  std::vector<uint64_t> witness;  // hat colors of players 1..n; all later hats black
  Rational average_wrong;         // exact average of wrong counts over all prefixes
  nlohmann::json to_json() const;
};

// Enumerates all 2^n prefixes with an all-black tail and returns one
// maximizing the number of wrong guesses among players 1..n (ties broken by
// the lexicographically smallest prefix, player 1 most significant).
AdversarialSearchResult adversarial_tail_black_search(const GuessRule& rule, uint32_t n,
                                                      const RandomSource& rng = RandomSource(0));

}  // namespace hats

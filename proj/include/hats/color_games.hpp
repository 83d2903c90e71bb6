// Larger color sets: per-player countable color ranges where a union bound
// makes any correct guess arbitrarily unlikely, positive-support guessing
// laws that keep a nonzero chance against any fixed assignment, and the
// continuum game where every measurable rule is almost surely wrong.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hats/strategy.hpp"

namespace hats {

// K_i = 2^(i+4): plain exponentially growing ranges.
ColorSpace powers_color_space();
// K_i = ceil(2^(i+1)/eps) for eps = eps_num/eps_den; the exact union bound
// sum(1/K_i) stays below eps for every prefix.
ColorSpace union_bound_color_space(uint64_t eps_num, uint64_t eps_den);
// Exact partial sum of 1/K_i for i = 1..n.
Rational union_bound_partial_sum(const ColorSpace& space, uint64_t n);

// Guesses uniformly within the player's own color range [0, K_i); knowing the
// ranges is the best the players can do, and still each player is correct
// with probability exactly 1/K_i.
class CountableUniformGuess : public GuessRule {
 public:
  explicit CountableUniformGuess(ColorSpace space);
  std::string name() const override { return "countable-uniform"; }
  ColorSpace space() const override { return space_; }
  uint64_t horizon(uint64_t n) const override { return n; }
  std::vector<uint64_t> window(uint64_t) const override { return {}; }
  uint64_t guess(uint64_t i, const HatAssignment&, const RandomSource& rng) const override;
  GuessDistribution guess_distribution(uint64_t i, const HatAssignment&) const override;

 private:
  ColorSpace space_;
};

// Guesses by a law giving positive probability to every nonnegative integer
// (Poisson with unit mean), so the guess matches any fixed hat color with
// positive probability.
class PositiveSupportGuess : public GuessRule {
 public:
  explicit PositiveSupportGuess(ColorSpace space);
  std::string name() const override { return "positive-support"; }
  ColorSpace space() const override { return space_; }
  uint64_t horizon(uint64_t n) const override { return n; }
  std::vector<uint64_t> window(uint64_t) const override { return {}; }
  uint64_t guess(uint64_t i, const HatAssignment&, const RandomSource& rng) const override;

 private:
  ColorSpace space_;
};

// Continuum game: hats uniform on [0,1); a guess is correct only on exact
// equality, which has probability zero.  Collisions are counted rather than
// assumed away.
enum class ContinuumRule { MeanOfFirstTen, ConstantHalf };

struct ContinuumReport {
  uint64_t runs = 0;
  uint64_t players = 0;
  uint64_t correct_total = 0;  // exact double equality
  nlohmann::json to_json() const;
};

// hat_law must name an atomless law ("uniform"); point masses are rejected.
ContinuumReport continuum_all_wrong_check(ContinuumRule rule, uint64_t runs, uint64_t players,
                                          uint64_t seed, const std::string& hat_law = "uniform");

}  // namespace hats

#include "hats/color_games.hpp"

#include <stdexcept>

namespace hats {

ColorSpace powers_color_space() {
  return ColorSpace::countable([](uint64_t i) {
    if (i + 4 > 62) throw std::overflow_error("countable color range exceeds 64 bits");
    return uint64_t(1) << (i + 4);
  });
}

ColorSpace union_bound_color_space(uint64_t eps_num, uint64_t eps_den) {
  if (eps_num == 0 || eps_den == 0) throw std::invalid_argument("eps must be positive");
  return ColorSpace::countable([=](uint64_t i) {
    if (i + 1 > 50) throw std::overflow_error("countable color range exceeds 64 bits");
    // ceil(2^(i+1) * den / num)
    uint64_t pow = uint64_t(1) << (i + 1);
    return (pow * eps_den + eps_num - 1) / eps_num;
  });
}

Rational union_bound_partial_sum(const ColorSpace& space, uint64_t n) {
  Rational total(0);
  for (uint64_t i = 1; i <= n; ++i) total += Rational::ratio(1, space.colors_for(i));
  return total;
}

CountableUniformGuess::CountableUniformGuess(ColorSpace space) : space_(std::move(space)) {
  if (space_.kind != ColorSpace::Kind::CountablePerPlayer)
    throw std::invalid_argument("countable-uniform: per-player countable spaces only");
}

uint64_t CountableUniformGuess::guess(uint64_t i, const HatAssignment&,
                                      const RandomSource& rng) const {
  return rng.guess_uniform(i, space_.colors_for(i));
}

GuessDistribution CountableUniformGuess::guess_distribution(uint64_t i,
                                                            const HatAssignment&) const {
  return GuessDistribution::uniform(space_.colors_for(i));
}

PositiveSupportGuess::PositiveSupportGuess(ColorSpace space) : space_(std::move(space)) {
  if (space_.kind != ColorSpace::Kind::CountablePerPlayer)
    throw std::invalid_argument("positive-support: per-player countable spaces only");
}

uint64_t PositiveSupportGuess::guess(uint64_t i, const HatAssignment&,
                                     const RandomSource& rng) const {
  return rng.guess_poisson1(i);
}

nlohmann::json ContinuumReport::to_json() const {
  return {{"runs", runs}, {"players", players}, {"correct_total", correct_total}};
}

ContinuumReport continuum_all_wrong_check(ContinuumRule rule, uint64_t runs, uint64_t players,
                                          uint64_t seed, const std::string& hat_law) {
  if (hat_law != "uniform")
    throw std::invalid_argument(
        "continuum game needs an atomless hat law; '" + hat_law + "' is not supported");
  ContinuumReport rep;
  rep.runs = runs;
  rep.players = players;
  for (uint64_t run = 0; run < runs; ++run) {
    RandomSource rng = RandomSource::for_run(seed, run);
    HatAssignment hats = sample_assignment(ColorSpace::continuum(), players, rng);
    for (uint64_t i = 1; i <= players; ++i) {
      double g = 0.5;
      if (rule == ContinuumRule::MeanOfFirstTen) {
        double sum = 0;
        int used = 0;
        for (uint64_t j = 1; j <= players && used < 10; ++j) {
          if (j == i) continue;
          sum += hats.real_color(j);
          ++used;
        }
        g = used ? sum / used : 0.5;
      }
      if (g == hats.real_color(i)) ++rep.correct_total;
    }
  }
  return rep;
}

}  // namespace hats

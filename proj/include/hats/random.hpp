// Deterministic, seedable randomness built on the SplitMix64 finalizer
// (Steele-Lea-Flood 2014, as popularized by Vigna's splitmix64.c).
//
// Draws are addressed by (seed, run, domain, index): every value is a pure
// function of those four, so sampling is random-access.  Simulating a longer
// prefix of the same run reproduces bit-identical values for the shared
// prefix, and parallel runs derive independent streams from the run index.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace hats {

inline uint64_t splitmix64_mix(uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class RandomSource {
 public:
  explicit RandomSource(uint64_t seed) : base_(splitmix64_mix(seed)) {}

  // Documented seed-splitting rule: run r of master seed s draws from
  // mix(mix(s) + (r+1) * golden).
  static RandomSource for_run(uint64_t seed, uint64_t run_index) {
    RandomSource r(0);
    r.base_ = splitmix64_mix(splitmix64_mix(seed) + (run_index + 1) * 0x9E3779B97F4A7C15ULL);
    return r;
  }

  uint64_t word(uint64_t domain, uint64_t index) const {
    return splitmix64_mix(base_ ^ domain ^ (index * 0xD1B54A32D192ED03ULL));
  }

  // --- hat colors (players are 1-based) ---

  // 64 consecutive binary hats packed per word; hat i is bit (i-1)%64 of
  // hat_word((i-1)/64).
  uint64_t hat_word(uint64_t w) const { return word(kDomainHat, w); }
  bool hat_bit(uint64_t player) const {
    uint64_t idx = player - 1;
    return (hat_word(idx >> 6) >> (idx & 63)) & 1;
  }
  // Uniform on {0,..,k-1}, exact via rejection over a per-player substream.
  uint64_t hat_uniform(uint64_t player, uint64_t k) const {
    return uniform_in(kDomainHatWide, player, k);
  }
  // Uniform on [0,1) with 53-bit resolution.
  double hat_real01(uint64_t player) const {
    return static_cast<double>(word(kDomainHatReal, player) >> 11) * 0x1.0p-53;
  }

  // --- guesses (for randomized strategies; independent of hat streams) ---

  bool guess_bit(uint64_t player) const { return word(kDomainGuess, player) & 1; }
  uint64_t guess_uniform(uint64_t player, uint64_t k) const {
    return uniform_in(kDomainGuessWide, player, k);
  }
  double guess_real01(uint64_t player) const {
    return static_cast<double>(word(kDomainGuess, player) >> 11) * 0x1.0p-53;
  }
  // Poisson(1) by CDF inversion of a single uniform.
  uint64_t guess_poisson1(uint64_t player) const {
    double u = guess_real01(player);
    double p = std::exp(-1.0), cdf = p;
    uint64_t v = 0;
    while (u >= cdf && v < 200) {
      ++v;
      p /= static_cast<double>(v);
      cdf += p;
    }
    return v;
  }

  // Generic uniform draw for auxiliary sampling (domain kept separate from
  // hats and guesses).
  uint64_t aux_uniform(uint64_t index, uint64_t k) const {
    return uniform_in(kDomainAux, index, k);
  }
  bool aux_bit(uint64_t index) const { return word(kDomainAux, index) & 1; }

 private:
  static constexpr uint64_t kDomainHat = 0x48415453ULL;        // binary hats, packed
  static constexpr uint64_t kDomainHatWide = 0x4B484154ULL;    // k-ary hats
  static constexpr uint64_t kDomainHatReal = 0x52484154ULL;    // real hats
  static constexpr uint64_t kDomainGuess = 0x47455353ULL;
  static constexpr uint64_t kDomainGuessWide = 0x4B475353ULL;
  static constexpr uint64_t kDomainAux = 0x41555800ULL;

  uint64_t uniform_in(uint64_t domain, uint64_t index, uint64_t k) const {
    if (k == 0) throw std::invalid_argument("uniform_in: k must be positive");
    if (k == 1) return 0;
    // Rejection below the largest multiple of k keeps the draw exactly uniform.
    uint64_t limit = UINT64_MAX - UINT64_MAX % k;
    uint64_t sub = splitmix64_mix(base_ ^ domain ^ (index * 0x8CB92BA72F3D8DD7ULL));
    for (uint64_t attempt = 0;; ++attempt) {
      uint64_t v = splitmix64_mix(sub + attempt * 0x9E3779B97F4A7C15ULL);
      if (v < limit) return v % k;
    }
  }

  uint64_t base_;
};

}  // namespace hats

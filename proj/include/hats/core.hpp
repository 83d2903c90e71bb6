// Core domain types of the hat-guessing game: color spaces, hat assignments
// with an explicit tail convention, outcome trajectories and density
// estimates.  Players are indexed 1,2,3,... throughout.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hats/bitvec.hpp"
#include "hats/random.hpp"
#include "hats/rational.hpp"

namespace hats {

struct ColorSpace {
  enum class Kind { Binary, FiniteK, CountablePerPlayer, Continuum };

  Kind kind = Kind::Binary;
  uint64_t k = 2;                                    // FiniteK
  std::function<uint64_t(uint64_t)> k_of;            // CountablePerPlayer: player -> K_i

  static ColorSpace binary() { return ColorSpace{}; }
  // FiniteK(2) and Binary are the same space.
  static ColorSpace finite(uint64_t k) {
    if (k < 2) throw std::invalid_argument("ColorSpace: need at least 2 colors");
    ColorSpace s;
    s.kind = k == 2 ? Kind::Binary : Kind::FiniteK;
    s.k = k;
    return s;
  }
  static ColorSpace countable(std::function<uint64_t(uint64_t)> k_of) {
    ColorSpace s;
    s.kind = Kind::CountablePerPlayer;
    s.k_of = std::move(k_of);
    return s;
  }
  static ColorSpace continuum() {
    ColorSpace s;
    s.kind = Kind::Continuum;
    return s;
  }

  bool is_finite_uniform() const { return kind == Kind::Binary || kind == Kind::FiniteK; }
  uint64_t colors_for(uint64_t player) const {
    switch (kind) {
      case Kind::Binary: return 2;
      case Kind::FiniteK: return k;
      case Kind::CountablePerPlayer: {
        uint64_t ki = k_of(player);
        if (ki < 2) throw std::invalid_argument("ColorSpace: K_i must be >= 2");
        return ki;
      }
      case Kind::Continuum: throw std::logic_error("ColorSpace: continuum has no color count");
    }
    throw std::logic_error("ColorSpace: bad kind");
  }
};

enum class Tail { Unsampled, ConstantBlack };

// A finite prefix of hat colors plus the convention for the (infinite) tail.
// ConstantBlack makes color(i) == 0 for every i beyond the prefix; it is the
// convention used by the adversarial search and is only legal for finite
// color spaces.
class HatAssignment {
 public:
  static HatAssignment binary(BitVec bits, Tail tail = Tail::Unsampled) {
    HatAssignment a;
    a.space_ = ColorSpace::binary();
    a.tail_ = tail;
    a.n_ = bits.size();
    a.bits_ = std::move(bits);
    return a;
  }
  static HatAssignment finite(const ColorSpace& space, std::vector<uint64_t> vals,
                              Tail tail = Tail::Unsampled) {
    if (space.kind == ColorSpace::Kind::Continuum)
      throw std::invalid_argument("HatAssignment::finite: wrong space");
    if (space.kind == ColorSpace::Kind::Binary) {
      BitVec b(vals.size());
      for (size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] > 1) throw std::invalid_argument("HatAssignment: binary color out of range");
        b.set(i, vals[i] != 0);
      }
      return binary(std::move(b), tail);
    }
    HatAssignment a;
    a.space_ = space;
    a.tail_ = tail;
    a.n_ = vals.size();
    for (size_t i = 0; i < vals.size(); ++i)
      if (vals[i] >= space.colors_for(i + 1))
        throw std::invalid_argument("HatAssignment: color out of range");
    a.vals_ = std::move(vals);
    return a;
  }
  static HatAssignment continuum(std::vector<double> vals) {
    HatAssignment a;
    a.space_ = ColorSpace::continuum();
    a.tail_ = Tail::Unsampled;  // a constant-black tail is a finite-space notion
    a.n_ = vals.size();
    a.reals_ = std::move(vals);
    return a;
  }

  const ColorSpace& space() const { return space_; }
  Tail tail() const { return tail_; }
  uint64_t prefix_length() const { return n_; }

  // Finite-space color of player i (1-based).
  uint64_t color(uint64_t i) const {
    if (i == 0) throw std::out_of_range("HatAssignment::color: players are 1-based");
    if (i > n_) {
      if (tail_ == Tail::ConstantBlack) return 0;
      throw std::out_of_range("HatAssignment::color: beyond sampled prefix");
    }
    if (space_.kind == ColorSpace::Kind::Binary) return bits_.get(i - 1);
    return vals_[i - 1];
  }
  bool bit(uint64_t i) const { return color(i) != 0; }
  double real_color(uint64_t i) const {
    if (i == 0 || i > n_) throw std::out_of_range("HatAssignment::real_color");
    return reals_[i - 1];
  }

  // Mutation is used by the exact analyzer's enumeration scratch space.
  void set_color(uint64_t i, uint64_t c) {
    if (i == 0 || i > n_) throw std::out_of_range("HatAssignment::set_color");
    if (space_.kind == ColorSpace::Kind::Binary)
      bits_.set(i - 1, c != 0);
    else
      vals_[i - 1] = c;
  }

  const BitVec& bits() const { return bits_; }
  BitVec& bits() { return bits_; }

 private:
  ColorSpace space_;
  Tail tail_ = Tail::Unsampled;
  uint64_t n_ = 0;
  BitVec bits_;
  std::vector<uint64_t> vals_;
  std::vector<double> reals_;
};

// Samples hats for players 1..n: independent, each finite color equiprobable,
// continuum colors uniform on [0,1).
HatAssignment sample_assignment(const ColorSpace& space, int64_t n, const RandomSource& rng);

struct Checkpoint {
  uint64_t k;
  uint64_t correct;  // number of correct guesses among players 1..k
};

// Per-player correctness bits plus evaluable prefix means.
class OutcomeTrajectory {
 public:
  OutcomeTrajectory() = default;
  explicit OutcomeTrajectory(BitVec correct, std::vector<Checkpoint> checkpoints = {});

  uint64_t players() const { return correct_.size(); }
  bool correct(uint64_t i) const { return correct_.get(i - 1); }
  const BitVec& correct_bits() const { return correct_; }

  // Number of correct guesses among players 1..k (O(1) via cached word sums).
  uint64_t correct_prefix_count(uint64_t k) const;
  // Exact fraction of players 1..k who guessed correctly.
  Rational prefix_mean(uint64_t k) const;

  const std::vector<Checkpoint>& checkpoints() const { return checkpoints_; }

 private:
  BitVec correct_;
  std::vector<uint64_t> cum_;  // cumulative popcount per word
  std::vector<Checkpoint> checkpoints_;
};

// Finite-window stand-ins for the lower/upper asymptotic densities: min and
// max of the prefix means over k in [k_min, players].  The window minimum can
// only over-estimate the asymptotic lower density (and the maximum can only
// under-estimate the upper one); checks against them absorb the other
// direction with an explicit tolerance.
struct DensityEstimate {
  Rational lower_hat;
  Rational upper_hat;
  uint64_t k_min = 0;
  uint64_t k_max = 0;
};

DensityEstimate density_estimate(const OutcomeTrajectory& traj, uint64_t k_min);

}  // namespace hats

#include "hats/core.hpp"

#include <bit>

namespace hats {

HatAssignment sample_assignment(const ColorSpace& space, int64_t n, const RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("sample_assignment: need at least one player");
  uint64_t un = static_cast<uint64_t>(n);
  switch (space.kind) {
    case ColorSpace::Kind::Binary: {
      BitVec b(un);
      auto& w = b.words();
      for (uint64_t i = 0; i < w.size(); ++i) w[i] = rng.hat_word(i);
      uint64_t rem = un & 63;
      if (rem) w.back() &= (1ULL << rem) - 1;
      return HatAssignment::binary(std::move(b));
    }
    case ColorSpace::Kind::FiniteK: {
      std::vector<uint64_t> v(un);
      for (uint64_t i = 1; i <= un; ++i) v[i - 1] = rng.hat_uniform(i, space.k);
      return HatAssignment::finite(space, std::move(v));
    }
    case ColorSpace::Kind::CountablePerPlayer: {
      std::vector<uint64_t> v(un);
      for (uint64_t i = 1; i <= un; ++i) v[i - 1] = rng.hat_uniform(i, space.colors_for(i));
      return HatAssignment::finite(space, std::move(v));
    }
    case ColorSpace::Kind::Continuum: {
      std::vector<double> v(un);
      for (uint64_t i = 1; i <= un; ++i) v[i - 1] = rng.hat_real01(i);
      return HatAssignment::continuum(std::move(v));
    }
  }
  throw std::logic_error("sample_assignment: bad color space");
}

OutcomeTrajectory::OutcomeTrajectory(BitVec correct, std::vector<Checkpoint> checkpoints)
    : correct_(std::move(correct)), checkpoints_(std::move(checkpoints)) {
  const auto& w = correct_.words();
  cum_.resize(w.size() + 1, 0);
  for (size_t i = 0; i < w.size(); ++i) cum_[i + 1] = cum_[i] + std::popcount(w[i]);
}

uint64_t OutcomeTrajectory::correct_prefix_count(uint64_t k) const {
  if (k > players()) throw std::out_of_range("OutcomeTrajectory: prefix beyond trajectory");
  uint64_t full = k >> 6;
  uint64_t total = cum_[full];
  uint64_t rem = k & 63;
  if (rem) total += std::popcount(correct_.words()[full] & ((1ULL << rem) - 1));
  return total;
}

Rational OutcomeTrajectory::prefix_mean(uint64_t k) const {
  if (k < 1 || k > players()) throw std::out_of_range("prefix_mean: k out of range");
  return Rational::ratio(correct_prefix_count(k), k);
}

DensityEstimate density_estimate(const OutcomeTrajectory& traj, uint64_t k_min) {
  uint64_t n = traj.players();
  if (k_min >= n) throw std::invalid_argument("density_estimate: k_min must be below the horizon");
  if (k_min < 1) k_min = 1;
  // Streaming min/max of count/k.  Arguments stay below 2^32, so the exact
  // cross-multiplication comparisons fit in uint64.
  uint64_t count = traj.correct_prefix_count(k_min - 1);
  uint64_t lo_num = 1, lo_den = 1, hi_num = 0, hi_den = 1;
  for (uint64_t k = k_min; k <= n; ++k) {
    count += traj.correct(k) ? 1 : 0;
    if (count * lo_den < lo_num * k) {
      lo_num = count;
      lo_den = k;
    }
    if (count * hi_den > hi_num * k) {
      hi_num = count;
      hi_den = k;
    }
  }
  DensityEstimate d;
  d.lower_hat = Rational::ratio(lo_num, lo_den);
  d.upper_hat = Rational::ratio(hi_num, hi_den);
  d.k_min = k_min;
  d.k_max = n;
  return d;
}

}  // namespace hats

// Mixed strategies: the square-numbered players are "inactive" (a density-zero
// noise source guessing black); their hat bits form a dyadic value v in [0,1)
// that selects a density-target pair (L0, U0) from a finite-support law mu by
// inverse CDF.  The remaining players re-index themselves consecutively and
// execute the strategy that attains the selected pair.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hats/strategy.hpp"
#include "hats/team_plan.hpp"

namespace hats {

struct MixedSupportPoint {
  Rational l, u, weight;
};

class MixedStrategy : public GuessRule {
 public:
  // mu: finite-support law over [0,1/2] x [1/2,1]; the dispatch map is the
  // inverse CDF over the points in the given order.  noise_bits is the number
  // of inactive hats read (dyadic resolution 2^-noise_bits).
  MixedStrategy(std::vector<MixedSupportPoint> mu, unsigned noise_bits = 53,
                uint64_t plan_teams = 8, PlanOptions plan_options = {.eps = "dyadic"});

  std::string name() const override { return "mixed"; }
  uint64_t horizon(uint64_t n) const override;
  std::vector<uint64_t> window(uint64_t i) const override;
  uint64_t guess(uint64_t i, const HatAssignment& hats, const RandomSource& rng) const override;
  void evaluate(const HatAssignment& hats, uint64_t n, const RandomSource& rng, BitVec& correct,
                RunArtifacts* art) const override;

  // Dispatch decision from the noise bits alone.
  size_t dispatch_index(const HatAssignment& hats) const;
  size_t dispatch_for_run(const RandomSource& rng) const;

  const std::vector<MixedSupportPoint>& support() const { return mu_; }
  const GuessRule& rule_for(size_t support_index) const { return *rules_[support_index]; }
  unsigned noise_bits() const { return noise_bits_; }

  static bool is_inactive(uint64_t player);
  static uint64_t inactive_count_upto(uint64_t n);  // = floor(sqrt(n))
  static uint64_t active_count_upto(uint64_t n) { return n - inactive_count_upto(n); }
  static uint64_t raw_to_active(uint64_t raw);      // raw must be active
  static uint64_t active_to_raw(uint64_t a);

 private:
  std::vector<MixedSupportPoint> mu_;
  std::vector<Rational> cum_;
  unsigned noise_bits_;
  std::vector<std::unique_ptr<GuessRule>> rules_;
};

}  // namespace hats

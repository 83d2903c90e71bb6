// The constructive strategy library: constant and independent-random
// baselines, even-odd groups, pairs, mod-K sums and groups, and growing-block
// strategies that drive the prefix densities to extreme values.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hats/strategy.hpp"

namespace hats {

// Every player guesses the same fixed color.
class ConstantStrategy : public GuessRule {
 public:
  ConstantStrategy(uint64_t color, ColorSpace space = ColorSpace::binary());
  std::string name() const override;
  ColorSpace space() const override { return space_; }
  uint64_t horizon(uint64_t n) const override { return n; }
  std::vector<uint64_t> window(uint64_t) const override { return {}; }
  uint64_t guess(uint64_t, const HatAssignment&, const RandomSource&) const override {
    return color_;
  }
  void evaluate(const HatAssignment& hats, uint64_t n, const RandomSource& rng, BitVec& correct,
                RunArtifacts* art) const override;

 private:
  uint64_t color_;
  ColorSpace space_;
};

// Every player guesses uniformly at random, independent of everything.
class IndependentRandomStrategy : public GuessRule {
 public:
  explicit IndependentRandomStrategy(ColorSpace space = ColorSpace::binary()) : space_(space) {}
  std::string name() const override { return "random"; }
  ColorSpace space() const override { return space_; }
  uint64_t horizon(uint64_t n) const override { return n; }
  std::vector<uint64_t> window(uint64_t) const override { return {}; }
  uint64_t guess(uint64_t i, const HatAssignment&, const RandomSource& rng) const override;
  GuessDistribution guess_distribution(uint64_t i, const HatAssignment&) const override;

 private:
  ColorSpace space_;
};

// Consecutive groups of a fixed size; within a group each player guesses the
// color that makes the group's white count even.  The whole group is correct
// exactly when its white count is even, otherwise entirely wrong.
class EvenOddGroupsStrategy : public GuessRule {
 public:
  explicit EvenOddGroupsStrategy(uint64_t group_size);
  std::string name() const override;
  uint64_t horizon(uint64_t n) const override;
  std::vector<uint64_t> window(uint64_t i) const override;
  uint64_t guess(uint64_t i, const HatAssignment& hats, const RandomSource&) const override;
  void evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&, BitVec& correct,
                RunArtifacts* art) const override;
  uint64_t group_size() const { return g_; }

 private:
  uint64_t g_;
};

// Players 2j-1 and 2j coordinate so that exactly one of them is correct for
// every assignment: the odd player copies the even player's color, the even
// player guesses the opposite of the odd player's.
class PairsStrategy : public GuessRule {
 public:
  std::string name() const override { return "pairs"; }
  uint64_t horizon(uint64_t n) const override { return n + (n & 1); }
  std::vector<uint64_t> window(uint64_t i) const override;
  uint64_t guess(uint64_t i, const HatAssignment& hats, const RandomSource&) const override;
  void evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&, BitVec& correct,
                RunArtifacts* art) const override;
};

// Finite game of exactly n players: player i guesses the unique color making
// the total color sum congruent to c mod K.  All players are correct iff the
// true sum hits the target residue, which happens with probability 1/K.
class ModKSumStrategy : public GuessRule {
 public:
  ModKSumStrategy(uint64_t k, uint64_t c, uint64_t n);
  std::string name() const override;
  ColorSpace space() const override { return ColorSpace::finite(k_); }
  uint64_t horizon(uint64_t n) const override;
  std::vector<uint64_t> window(uint64_t i) const override;
  uint64_t guess(uint64_t i, const HatAssignment& hats, const RandomSource&) const override;
  void evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&, BitVec& correct,
                RunArtifacts* art) const override;

 private:
  uint64_t k_, c_, n_;
};

// Consecutive groups of size K over K colors; the j-th member of a group
// guesses assuming the group sum is congruent to j-1 mod K, so exactly one
// member per group is correct for every assignment.
class ModKGroupsStrategy : public GuessRule {
 public:
  explicit ModKGroupsStrategy(uint64_t k);
  std::string name() const override;
  ColorSpace space() const override { return ColorSpace::finite(k_); }
  uint64_t horizon(uint64_t n) const override;
  std::vector<uint64_t> window(uint64_t i) const override;
  uint64_t guess(uint64_t i, const HatAssignment& hats, const RandomSource&) const override;
  void evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&, BitVec& correct,
                RunArtifacts* art) const override;

 private:
  uint64_t k_;
};

// Block end positions n_1 < n_2 < ...; block j is {n_{j-1}+1, ..., n_j}.
// Named kinds extend on demand; an explicit list is an error to exceed.
class BlockSchedule {
 public:
  enum class Kind {
    Explicit,   // fixed list of block ends
    PowersTwo,  // n_j = 2^j (constant ratio 1/2; many blocks per horizon)
    Decade,     // 1,2,4,10,100,...,1e7 then doubling (six tenfold steps)
    Diverging,  // n_j = n_{j-1} * (j+1): block ratio 1/(j+1) -> 0
  };

  static BlockSchedule explicit_ends(std::vector<uint64_t> ends);
  static BlockSchedule named(Kind kind);
  static BlockSchedule named(const std::string& kind);

  Kind kind() const { return kind_; }
  std::string kind_name() const;
  // End of block j (1-based); n_0 = 0.
  uint64_t end(size_t j) const;
  // Whether block j exists (explicit schedules are finite).
  bool has_block(size_t j) const;
  // Index of the block containing the given player.
  size_t block_of(uint64_t player) const;
  size_t known_blocks() const { return ends_.size(); }

 private:
  void extend_to_cover(uint64_t player) const;
  Kind kind_ = Kind::Explicit;
  mutable std::vector<uint64_t> ends_;
};

// Each block plays even-odd internally, ignoring all other blocks, so block j
// is entirely correct with probability 1/2 independently of the rest.  With
// block ratios n_{j-1}/n_j shrinking, wins push the prefix mean near 1 and
// losses push it near 0.
class BlockStrategy : public GuessRule {
 public:
  explicit BlockStrategy(BlockSchedule schedule);
  std::string name() const override;
  uint64_t horizon(uint64_t n) const override;
  std::vector<uint64_t> window(uint64_t i) const override;
  uint64_t guess(uint64_t i, const HatAssignment& hats, const RandomSource&) const override;
  void evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&, BitVec& correct,
                RunArtifacts* art) const override;
  std::vector<uint64_t> checkpoint_marks(uint64_t n) const override;
  const BlockSchedule& schedule() const { return schedule_; }

 private:
  BlockSchedule schedule_;
};

// Pairs-fill helper shared by strategies that fall back to the pairs rule on
// sub-ranges: pairs are (lo, lo+1), (lo+2, lo+3), ... within [lo, hi).
void pairs_fill(const HatAssignment& hats, uint64_t lo, uint64_t hi, uint64_t n, BitVec& correct);

}  // namespace hats

#include "hats/strategies.hpp"

#include <algorithm>
#include <stdexcept>

namespace hats {

void GuessRule::evaluate(const HatAssignment& hats, uint64_t n, const RandomSource& rng,
                         BitVec& correct, RunArtifacts*) const {
  correct.resize(n);
  for (uint64_t i = 1; i <= n; ++i) {
    uint64_t g = guess(i, hats, rng);
    bool right = space().kind == ColorSpace::Kind::Continuum
                     ? false
                     : g == hats.color(i);
    correct.set(i - 1, right);
  }
}

void pairs_fill(const HatAssignment& hats, uint64_t lo, uint64_t hi, uint64_t n, BitVec& correct) {
  for (uint64_t a = lo; a + 1 < hi; a += 2) {
    uint64_t b = a + 1;
    bool same = hats.bit(a) == hats.bit(b);
    // Odd member copies its partner, even member guesses the opposite:
    // same colors -> first correct, different colors -> second correct.
    if (a <= n) correct.set(a - 1, same);
    if (b <= n) correct.set(b - 1, !same);
  }
}

// --- ConstantStrategy ---

ConstantStrategy::ConstantStrategy(uint64_t color, ColorSpace space)
    : color_(color), space_(space) {
  if (space_.kind == ColorSpace::Kind::Continuum)
    throw std::invalid_argument("constant strategy: finite color spaces only");
  if (space_.is_finite_uniform() && color_ >= space_.colors_for(1))
    throw std::invalid_argument("constant strategy: color out of range");
}

std::string ConstantStrategy::name() const {
  return "constant-" + std::to_string(color_);
}

void ConstantStrategy::evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&,
                                BitVec& correct, RunArtifacts*) const {
  correct.resize(n);
  for (uint64_t i = 1; i <= n; ++i) correct.set(i - 1, hats.color(i) == color_);
}

// --- IndependentRandomStrategy ---

uint64_t IndependentRandomStrategy::guess(uint64_t i, const HatAssignment& hats,
                                          const RandomSource& rng) const {
  uint64_t k = space_.colors_for(i);
  (void)hats;
  return rng.guess_uniform(i, k);
}

GuessDistribution IndependentRandomStrategy::guess_distribution(uint64_t i,
                                                                const HatAssignment&) const {
  return GuessDistribution::uniform(space_.colors_for(i));
}

// --- EvenOddGroupsStrategy ---

EvenOddGroupsStrategy::EvenOddGroupsStrategy(uint64_t group_size) : g_(group_size) {
  if (g_ < 1) throw std::invalid_argument("even-odd: group size must be positive");
}

std::string EvenOddGroupsStrategy::name() const { return "even-odd-" + std::to_string(g_); }

uint64_t EvenOddGroupsStrategy::horizon(uint64_t n) const {
  return (n + g_ - 1) / g_ * g_;
}

std::vector<uint64_t> EvenOddGroupsStrategy::window(uint64_t i) const {
  uint64_t start = (i - 1) / g_ * g_ + 1;
  std::vector<uint64_t> w;
  for (uint64_t j = start; j < start + g_; ++j)
    if (j != i) w.push_back(j);
  return w;
}

uint64_t EvenOddGroupsStrategy::guess(uint64_t i, const HatAssignment& hats,
                                      const RandomSource&) const {
  uint64_t start = (i - 1) / g_ * g_ + 1;
  uint64_t parity = 0;
  for (uint64_t j = start; j < start + g_; ++j)
    if (j != i) parity ^= hats.color(j) & 1;
  return parity;
}

void EvenOddGroupsStrategy::evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&,
                                     BitVec& correct, RunArtifacts* art) const {
  correct.resize(n);
  uint64_t groups = (n + g_ - 1) / g_;
  if (art) art->block_win.assign(groups, 0);
  for (uint64_t m = 0; m < groups; ++m) {
    uint64_t lo = m * g_ + 1, hi = lo + g_;  // [lo, hi)
    bool odd = hats.bits().parity_range(lo - 1, hi - 1);
    if (art) art->block_win[m] = !odd;
    uint64_t top = std::min(hi - 1, n);
    correct.fill_range(lo - 1, top, !odd);
  }
}

// --- PairsStrategy ---

std::vector<uint64_t> PairsStrategy::window(uint64_t i) const {
  return {i % 2 == 1 ? i + 1 : i - 1};
}

uint64_t PairsStrategy::guess(uint64_t i, const HatAssignment& hats, const RandomSource&) const {
  if (i % 2 == 1) return hats.color(i + 1);
  return 1 - hats.color(i - 1);
}

void PairsStrategy::evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&,
                             BitVec& correct, RunArtifacts*) const {
  correct.resize(n);
  pairs_fill(hats, 1, horizon(n) + 1, n, correct);
}

// --- ModKSumStrategy ---

ModKSumStrategy::ModKSumStrategy(uint64_t k, uint64_t c, uint64_t n) : k_(k), c_(c), n_(n) {
  if (k_ < 2) throw std::invalid_argument("mod-k sum: need K >= 2");
  if (c_ >= k_) throw std::invalid_argument("mod-k sum: residue out of range");
  if (n_ < 1) throw std::invalid_argument("mod-k sum: need at least one player");
}

std::string ModKSumStrategy::name() const {
  return "mod" + std::to_string(k_) + "-sum-" + std::to_string(c_);
}

uint64_t ModKSumStrategy::horizon(uint64_t n) const {
  if (n > n_) throw std::invalid_argument("mod-k sum: fixed game of " + std::to_string(n_) + " players");
  return n_;
}

std::vector<uint64_t> ModKSumStrategy::window(uint64_t i) const {
  std::vector<uint64_t> w;
  for (uint64_t j = 1; j <= n_; ++j)
    if (j != i) w.push_back(j);
  return w;
}

uint64_t ModKSumStrategy::guess(uint64_t i, const HatAssignment& hats, const RandomSource&) const {
  uint64_t seen = 0;
  for (uint64_t j = 1; j <= n_; ++j)
    if (j != i) seen = (seen + hats.color(j)) % k_;
  return (c_ + k_ - seen) % k_;
}

void ModKSumStrategy::evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&,
                               BitVec& correct, RunArtifacts*) const {
  correct.resize(n);
  uint64_t total = 0;
  for (uint64_t j = 1; j <= n_; ++j) total = (total + hats.color(j)) % k_;
  bool all_right = total == c_;
  correct.fill_range(0, std::min(n, n_), all_right);
}

// --- ModKGroupsStrategy ---

ModKGroupsStrategy::ModKGroupsStrategy(uint64_t k) : k_(k) {
  if (k_ < 2) throw std::invalid_argument("mod-k groups: need K >= 2");
}

std::string ModKGroupsStrategy::name() const { return "mod" + std::to_string(k_) + "-groups"; }

uint64_t ModKGroupsStrategy::horizon(uint64_t n) const { return (n + k_ - 1) / k_ * k_; }

std::vector<uint64_t> ModKGroupsStrategy::window(uint64_t i) const {
  uint64_t start = (i - 1) / k_ * k_ + 1;
  std::vector<uint64_t> w;
  for (uint64_t j = start; j < start + k_; ++j)
    if (j != i) w.push_back(j);
  return w;
}

uint64_t ModKGroupsStrategy::guess(uint64_t i, const HatAssignment& hats,
                                   const RandomSource&) const {
  uint64_t start = (i - 1) / k_ * k_ + 1;
  uint64_t member = i - start;  // 0-based within group; assumes sum == member (mod K)
  uint64_t seen = 0;
  for (uint64_t j = start; j < start + k_; ++j)
    if (j != i) seen = (seen + hats.color(j)) % k_;
  return (member + k_ - seen) % k_;
}

void ModKGroupsStrategy::evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&,
                                  BitVec& correct, RunArtifacts*) const {
  correct.resize(n);
  uint64_t groups = (n + k_ - 1) / k_;
  for (uint64_t m = 0; m < groups; ++m) {
    uint64_t start = m * k_ + 1;
    uint64_t sum = 0;
    for (uint64_t j = start; j < start + k_; ++j) sum = (sum + hats.color(j)) % k_;
    // The member whose assumed residue matches the true sum is the one
    // correct guesser of the group.
    uint64_t winner = start + sum;
    for (uint64_t j = start; j < start + k_ && j <= n; ++j) correct.set(j - 1, j == winner);
  }
}

// --- BlockSchedule ---

BlockSchedule BlockSchedule::explicit_ends(std::vector<uint64_t> ends) {
  if (ends.empty()) throw std::invalid_argument("block schedule: need at least one block");
  for (size_t j = 0; j < ends.size(); ++j) {
    uint64_t prev = j == 0 ? 0 : ends[j - 1];
    if (ends[j] <= prev) throw std::invalid_argument("block schedule: ends must be strictly increasing");
  }
  BlockSchedule s;
  s.kind_ = Kind::Explicit;
  s.ends_ = std::move(ends);
  return s;
}

BlockSchedule BlockSchedule::named(Kind kind) {
  BlockSchedule s;
  s.kind_ = kind;
  switch (kind) {
    case Kind::Explicit:
      throw std::invalid_argument("block schedule: explicit kind needs ends");
    case Kind::PowersTwo:
      s.ends_ = {2};
      break;
    case Kind::Decade:
      s.ends_ = {1, 2, 4, 10, 100, 1000, 10000, 100000, 1000000, 10000000};
      break;
    case Kind::Diverging:
      s.ends_ = {2};
      break;
  }
  return s;
}

BlockSchedule BlockSchedule::named(const std::string& kind) {
  if (kind == "powers2") return named(Kind::PowersTwo);
  if (kind == "decade") return named(Kind::Decade);
  if (kind == "diverging") return named(Kind::Diverging);
  throw std::invalid_argument("block schedule: unknown kind '" + kind + "'");
}

std::string BlockSchedule::kind_name() const {
  switch (kind_) {
    case Kind::Explicit: return "explicit";
    case Kind::PowersTwo: return "powers2";
    case Kind::Decade: return "decade";
    case Kind::Diverging: return "diverging";
  }
  return "?";
}

void BlockSchedule::extend_to_cover(uint64_t player) const {
  while (ends_.back() < player) {
    uint64_t last = ends_.back();
    switch (kind_) {
      case Kind::Explicit:
        throw std::out_of_range("block schedule: player beyond the last explicit block");
      case Kind::PowersTwo:
      case Kind::Decade:
        if (last > UINT64_MAX / 2) throw std::overflow_error("block schedule overflow");
        ends_.push_back(last * 2);
        break;
      case Kind::Diverging: {
        uint64_t j = ends_.size() + 1;  // index of the new block
        if (last > UINT64_MAX / (j + 1)) throw std::overflow_error("block schedule overflow");
        ends_.push_back(last * (j + 1));
        break;
      }
    }
  }
}

uint64_t BlockSchedule::end(size_t j) const {
  if (j == 0) return 0;
  while (j > ends_.size()) extend_to_cover(ends_.back() + 1);
  return ends_[j - 1];
}

bool BlockSchedule::has_block(size_t j) const {
  return kind_ != Kind::Explicit || j <= ends_.size();
}

size_t BlockSchedule::block_of(uint64_t player) const {
  extend_to_cover(player);
  auto it = std::lower_bound(ends_.begin(), ends_.end(), player);
  return static_cast<size_t>(it - ends_.begin()) + 1;
}

// --- BlockStrategy ---

BlockStrategy::BlockStrategy(BlockSchedule schedule) : schedule_(std::move(schedule)) {}

std::string BlockStrategy::name() const { return "block-" + schedule_.kind_name(); }

uint64_t BlockStrategy::horizon(uint64_t n) const {
  return schedule_.end(schedule_.block_of(n));
}

std::vector<uint64_t> BlockStrategy::window(uint64_t i) const {
  size_t j = schedule_.block_of(i);
  uint64_t lo = schedule_.end(j - 1) + 1, hi = schedule_.end(j);
  std::vector<uint64_t> w;
  for (uint64_t p = lo; p <= hi; ++p)
    if (p != i) w.push_back(p);
  return w;
}

uint64_t BlockStrategy::guess(uint64_t i, const HatAssignment& hats, const RandomSource&) const {
  size_t j = schedule_.block_of(i);
  uint64_t lo = schedule_.end(j - 1) + 1, hi = schedule_.end(j);
  uint64_t parity = 0;
  for (uint64_t p = lo; p <= hi; ++p)
    if (p != i) parity ^= hats.color(p) & 1;
  return parity;
}

void BlockStrategy::evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&,
                             BitVec& correct, RunArtifacts* art) const {
  correct.resize(n);
  size_t blocks = schedule_.block_of(n);
  if (art) art->block_win.assign(blocks, 0);
  for (size_t j = 1; j <= blocks; ++j) {
    uint64_t lo = schedule_.end(j - 1) + 1, hi = schedule_.end(j);
    bool odd = hats.bits().parity_range(lo - 1, hi);
    if (art) art->block_win[j - 1] = !odd;
    correct.fill_range(lo - 1, std::min(hi, n), !odd);
  }
}

std::vector<uint64_t> BlockStrategy::checkpoint_marks(uint64_t n) const {
  std::vector<uint64_t> marks;
  for (size_t j = 1; schedule_.has_block(j) && schedule_.end(j) <= n; ++j)
    marks.push_back(schedule_.end(j));
  return marks;
}

}  // namespace hats

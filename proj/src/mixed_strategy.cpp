#include "hats/mixed_strategy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hats/strategies.hpp"
#include "hats/team_strategy.hpp"

namespace hats {

namespace {

const Rational kHalf(1, 2);

uint64_t isqrt(uint64_t v) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::unique_ptr<GuessRule> rule_for_targets(const Rational& l, const Rational& u,
                                            uint64_t teams, const PlanOptions& options) {
  if (l == kHalf && u == kHalf) return std::make_unique<PairsStrategy>();
  return std::make_unique<TeamStrategy>(generate_alternating_plan(l, u, teams, options));
}

}  // namespace

MixedStrategy::MixedStrategy(std::vector<MixedSupportPoint> mu, unsigned noise_bits,
                             uint64_t plan_teams, PlanOptions plan_options)
    : mu_(std::move(mu)), noise_bits_(noise_bits) {
  if (mu_.empty()) throw std::invalid_argument("mixed strategy: empty support");
  if (noise_bits_ < 1 || noise_bits_ > 62)
    throw std::invalid_argument("mixed strategy: noise_bits must be in [1, 62]");
  Rational total(0);
  for (const auto& p : mu_) {
    if (p.l < Rational(0) || p.l > kHalf || p.u < kHalf || p.u > Rational(1))
      throw std::invalid_argument("mixed strategy: support outside [0,1/2] x [1/2,1]");
    if (p.weight <= Rational(0)) throw std::invalid_argument("mixed strategy: weights must be positive");
    total += p.weight;
    cum_.push_back(total);
  }
  if (total != Rational(1)) throw std::invalid_argument("mixed strategy: weights must sum to 1");
  for (const auto& p : mu_) rules_.push_back(rule_for_targets(p.l, p.u, plan_teams, plan_options));
}

bool MixedStrategy::is_inactive(uint64_t player) {
  uint64_t r = isqrt(player);
  return r * r == player;
}

uint64_t MixedStrategy::inactive_count_upto(uint64_t n) { return isqrt(n); }

uint64_t MixedStrategy::raw_to_active(uint64_t raw) {
  if (is_inactive(raw)) throw std::invalid_argument("raw_to_active: inactive player");
  return raw - isqrt(raw);
}

uint64_t MixedStrategy::active_to_raw(uint64_t a) {
  if (a == 0) throw std::invalid_argument("active_to_raw: players are 1-based");
  // Fixpoint of q = #squares <= a + q; q is nondecreasing along the
  // iteration and bounded, and the limit is never itself a square.
  uint64_t q = isqrt(a);
  for (int iter = 0; iter < 128; ++iter) {
    uint64_t r = a + q;
    uint64_t qq = isqrt(r);
    if (qq == q) {
      if (r == q * q) break;  // defensive; unreachable for a >= 1
      return r;
    }
    q = qq;
  }
  throw std::logic_error("active_to_raw: no fixpoint");
}

size_t MixedStrategy::dispatch_index(const HatAssignment& hats) const {
  // v = sum of noise bits t = 1..B at weight 2^-t, exact.
  uint64_t v_num = 0;
  for (unsigned t = 1; t <= noise_bits_; ++t) {
    v_num = (v_num << 1) | (hats.color(static_cast<uint64_t>(t) * t) & 1);
  }
  Rational v = Rational::from_uint(v_num) / Rational(mpq_class(mpz_class(1) << noise_bits_));
  for (size_t m = 0; m < cum_.size(); ++m)
    if (v < cum_[m]) return m;
  return cum_.size() - 1;
}

size_t MixedStrategy::dispatch_for_run(const RandomSource& rng) const {
  // Identical values to a full run: hat bits are addressed by player index.
  uint64_t v_num = 0;
  for (unsigned t = 1; t <= noise_bits_; ++t)
    v_num = (v_num << 1) | (rng.hat_bit(static_cast<uint64_t>(t) * t) ? 1u : 0u);
  Rational v = Rational::from_uint(v_num) / Rational(mpq_class(mpz_class(1) << noise_bits_));
  for (size_t m = 0; m < cum_.size(); ++m)
    if (v < cum_[m]) return m;
  return cum_.size() - 1;
}

uint64_t MixedStrategy::horizon(uint64_t n) const {
  uint64_t h = static_cast<uint64_t>(noise_bits_) * noise_bits_;
  uint64_t n_active = active_count_upto(n);
  if (n_active == 0) n_active = 1;
  for (const auto& rule : rules_) {
    uint64_t sub_h = rule->horizon(n_active);
    h = std::max(h, active_to_raw(sub_h));
  }
  return std::max(h, n);
}

std::vector<uint64_t> MixedStrategy::window(uint64_t i) const {
  if (is_inactive(i)) return {};
  std::vector<uint64_t> w;
  for (unsigned t = 1; t <= noise_bits_; ++t) {
    uint64_t sq = static_cast<uint64_t>(t) * t;
    if (sq != i) w.push_back(sq);
  }
  uint64_t a = raw_to_active(i);
  for (const auto& rule : rules_) {
    for (uint64_t wa : rule->window(a)) {
      uint64_t raw = active_to_raw(wa);
      if (raw != i) w.push_back(raw);
    }
  }
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

uint64_t MixedStrategy::guess(uint64_t i, const HatAssignment& hats, const RandomSource& rng) const {
  if (is_inactive(i)) return 0;  // noise players just guess black
  size_t m = dispatch_index(hats);
  const GuessRule& rule = *rules_[m];
  uint64_t a = raw_to_active(i);
  uint64_t sub_h = rule.horizon(a);
  BitVec sub(sub_h);
  for (uint64_t aa = 1, raw = 2; aa <= sub_h; ++raw) {
    if (is_inactive(raw)) continue;
    sub.set(aa - 1, hats.bit(raw));
    ++aa;
  }
  HatAssignment sub_hats = HatAssignment::binary(std::move(sub), hats.tail());
  return rule.guess(a, sub_hats, rng);
}

void MixedStrategy::evaluate(const HatAssignment& hats, uint64_t n, const RandomSource& rng,
                             BitVec& correct, RunArtifacts* art) const {
  correct.resize(n);
  size_t m = dispatch_index(hats);
  if (art) art->dispatch = m;
  const GuessRule& rule = *rules_[m];

  uint64_t n_active = active_count_upto(n);
  if (n_active == 0) {
    for (uint64_t i = 1; i <= n; ++i) correct.set(i - 1, hats.bit(i) == false);
    return;
  }
  uint64_t sub_h = rule.horizon(n_active);
  BitVec sub(sub_h);
  {
    uint64_t aa = 1;
    for (uint64_t raw = 2; aa <= sub_h; ++raw) {
      if (is_inactive(raw)) continue;
      sub.set(aa - 1, hats.bit(raw));
      ++aa;
    }
  }
  HatAssignment sub_hats = HatAssignment::binary(std::move(sub), hats.tail());
  BitVec sub_correct;
  rule.evaluate(sub_hats, n_active, rng, sub_correct, nullptr);

  uint64_t aa = 0;
  for (uint64_t raw = 1; raw <= n; ++raw) {
    if (is_inactive(raw)) {
      correct.set(raw - 1, hats.bit(raw) == false);
    } else {
      correct.set(raw - 1, sub_correct.get(aa));
      ++aa;
    }
  }
}

}  // namespace hats

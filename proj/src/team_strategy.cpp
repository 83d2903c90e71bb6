#include "hats/team_strategy.hpp"

#include <algorithm>
#include <stdexcept>

#include "hats/strategies.hpp"

namespace hats {

namespace {

// Checked narrowing for the hot comparison loop; plan sizes at simulation
// scale keep these far below 2^63.
int64_t narrow(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) throw std::overflow_error(std::string("team bound too large: ") + what);
  return z.get_si();
}

struct FastBound {
  int64_t num = 0, den = 1;
  static FastBound from(const Rational& r) {
    return {narrow(r.num(), "num"), narrow(r.den(), "den")};
  }
  // count/i <= bound
  bool at_most(uint64_t count, uint64_t i) const {
    return static_cast<__int128>(count) * den <= static_cast<__int128>(num) * i;
  }
  bool at_least(uint64_t count, uint64_t i) const {
    return static_cast<__int128>(count) * den >= static_cast<__int128>(num) * i;
  }
};

const Rational kHalf(1, 2);
const Rational kOne(1);

}  // namespace

TeamStrategy::TeamStrategy(TeamPlan plan) : plan_(std::move(plan)) {
  if (plan_.pairs_degenerate)
    throw std::invalid_argument("team strategy: degenerate plan plays plain pairs");
  if (plan_.teams.empty()) throw std::invalid_argument("team strategy: empty plan");
  PlanValidation v = validate_plan(plan_);
  if (!v.pass)
    throw std::invalid_argument("team strategy: invalid plan: " + v.first_violation);
}

std::string TeamStrategy::name() const {
  std::string base = plan_.l ? "alternating-" + plan_.l->str() + "-" + plan_.u.str()
                             : "team-" + plan_.u.str();
  for (auto& c : base)
    if (c == '/') c = ':';
  return base;
}

size_t TeamStrategy::team_of(uint64_t player) const {
  if (player == 0 || player > plan_.total_players())
    throw std::out_of_range("team strategy: player outside the plan");
  // Teams are few; a linear scan from the back is fine and allocation-free.
  for (size_t idx = plan_.teams.size(); idx-- > 0;) {
    if (player > plan_.teams[idx].n) return idx;
  }
  throw std::out_of_range("team_of: players are 1-based");
}

uint64_t TeamStrategy::horizon(uint64_t n) const {
  if (n > plan_.total_players())
    throw std::out_of_range("team strategy: plan covers only " +
                            std::to_string(plan_.total_players()) + " players");
  const TeamParams& t = plan_.teams[team_of(n)];
  uint64_t pos = n - t.n;
  if (t.g > 0 && pos <= t.g) return t.n + ((pos - 1) / t.s + 1) * t.s;  // own block end
  uint64_t off = pos - t.g;  // 1-based within the recovery squad
  return off % 2 == 1 ? n + 1 : n;
}

std::vector<uint64_t> TeamStrategy::window(uint64_t i) const {
  const TeamParams& t = plan_.teams[team_of(i)];
  uint64_t pos = i - t.n;
  std::vector<uint64_t> w;
  if (t.g > 0 && pos <= t.g) {
    uint64_t j = (pos - 1) / t.s + 1;  // own block; reads blocks 1..j
    for (uint64_t p = t.n + 1; p <= t.n + j * t.s; ++p)
      if (p != i) w.push_back(p);
  } else {
    uint64_t off = pos - t.g;  // 1-based within the recovery squad
    w.push_back(off % 2 == 1 ? i + 1 : i - 1);
  }
  return w;
}

uint64_t TeamStrategy::guess(uint64_t i, const HatAssignment& hats, const RandomSource&) const {
  const TeamParams& t = plan_.teams[team_of(i)];
  uint64_t pos = i - t.n;
  bool odd_trigger = t.mode == TeamMode::Lose;
  if (t.g > 0 && pos <= t.g) {
    uint64_t j = (pos - 1) / t.s + 1;
    bool chain = true;
    for (uint64_t jj = 1; jj + 1 <= j; ++jj) {
      uint64_t lo = t.n + (jj - 1) * t.s + 1, hi = t.n + jj * t.s;
      uint64_t parity = 0;
      for (uint64_t p = lo; p <= hi; ++p) parity ^= hats.color(p) & 1;
      chain = chain && (parity == (odd_trigger ? 1u : 0u));
    }
    if (chain) {
      // even-odd within the own block
      uint64_t lo = t.n + (j - 1) * t.s + 1, hi = t.n + j * t.s;
      uint64_t parity = 0;
      for (uint64_t p = lo; p <= hi; ++p)
        if (p != i) parity ^= hats.color(p) & 1;
      return parity;
    }
    uint64_t local = (pos - 1) % t.s + 1;
    return local % 2 == 1 ? hats.color(i + 1) : 1 - hats.color(i - 1);
  }
  uint64_t off = pos - t.g;
  return off % 2 == 1 ? hats.color(i + 1) : 1 - hats.color(i - 1);
}

void TeamStrategy::evaluate(const HatAssignment& hats, uint64_t n, const RandomSource&,
                            BitVec& correct, RunArtifacts* art) const {
  correct.resize(n);
  size_t last_team = team_of(n);
  if (art) art->team_event.assign(last_team + 1, 0);
  for (size_t idx = 0; idx <= last_team; ++idx) {
    const TeamParams& t = plan_.teams[idx];
    bool odd_trigger = t.mode == TeamMode::Lose;
    bool chain = true;  // preceding blocks all satisfied the trigger condition
    bool event = true;  // all blocks satisfied it (the team's gamble succeeds)
    bool all_blocks_seen = t.s > 0;
    for (uint64_t j = 1; t.s > 0 && j <= t.b; ++j) {
      uint64_t lo = t.n + (j - 1) * t.s + 1, hi = t.n + j * t.s;
      if (lo > n) {
        all_blocks_seen = false;  // beyond the requested players; hats not read
        break;
      }
      bool odd = hats.bits().parity_range(lo - 1, hi);
      if (chain) {
        correct.fill_range(lo - 1, std::min(hi, n), !odd);
      } else {
        pairs_fill(hats, lo, hi + 1, n, correct);
      }
      bool satisfied = odd == odd_trigger;
      chain = chain && satisfied;
      event = event && satisfied;
    }
    uint64_t rlo = t.n + t.g + 1;
    if (rlo <= n) {
      uint64_t rtop = t.end();
      if (n < rtop) rtop = (n - rlo) % 2 == 0 ? n + 1 : n;  // finish the straddling pair
      pairs_fill(hats, rlo, rtop + 1, n, correct);
    }
    if (art) art->team_event[idx] = all_blocks_seen && event;
  }
}

std::vector<uint64_t> TeamStrategy::checkpoint_marks(uint64_t n) const {
  std::vector<uint64_t> marks;
  for (const auto& t : plan_.teams) {
    if (t.k >= 1 && t.n <= n) marks.push_back(t.n);
    if (t.g > 0 && t.n + t.g <= n) marks.push_back(t.n + t.g);
  }
  return marks;
}

TeamRunCheck check_team_sure_bounds(const TeamPlan& plan, const OutcomeTrajectory& traj,
                                    const RunArtifacts& art) {
  TeamRunCheck out;
  uint64_t N = traj.players();
  auto fail = [&](const std::string& msg) {
    out.pass = false;
    out.violations.push_back(msg);
  };

  for (size_t idx = 0; idx < plan.teams.size(); ++idx) {
    const TeamParams& t = plan.teams[idx];
    if (t.k == 0 || t.n > N) continue;
    ++out.checked_teams;
    std::string tag = "team " + std::to_string(t.k);

    // Sandwich at the team start.
    Rational zn = traj.prefix_mean(t.n);
    if (!(kHalf - t.eps < zn && zn < kHalf + t.eps))
      fail(tag + ": start mean " + zn.str() + " outside (1/2-eps, 1/2+eps), eps=" + t.eps.str());

    Rational nr = Rational::from_uint(t.n);
    Rational g_mass = Rational::from_uint(t.mode == TeamMode::Win ? t.g : t.s);
    Rational drop_mass = Rational::from_uint(t.mode == TeamMode::Win ? t.s : t.g);
    Rational hi_bound = (nr * (kHalf + t.eps) + g_mass) / (nr + g_mass);
    Rational lo_bound = nr * (kHalf - t.eps) / (nr + drop_mass);
    FastBound hi = FastBound::from(hi_bound);
    FastBound lo = FastBound::from(lo_bound);

    uint64_t top = std::min(t.end(), N);
    uint64_t count = traj.correct_prefix_count(t.n);
    for (uint64_t i = t.n + 1; i <= top; ++i) {
      count += traj.correct(i) ? 1 : 0;
      if (i % 2) continue;  // bounds live on the pairing grid
      if (!hi.at_most(count, i)) {
        fail(tag + ": mean at i=" + std::to_string(i) + " above the team ceiling " +
             hi_bound.str());
        break;
      }
      if (!lo.at_least(count, i)) {
        fail(tag + ": mean at i=" + std::to_string(i) + " below the team floor " +
             lo_bound.str());
        break;
      }
    }

    // Gamble-success bound at the gambler/recovery boundary.
    uint64_t i0 = t.n + t.g;
    if (idx < art.team_event.size() && art.team_event[idx] && i0 <= N && t.g > 0) {
      Rational z0 = traj.prefix_mean(i0);
      Rational slack = t.eps / (kOne + t.alpha);
      if (t.mode == TeamMode::Win) {
        if (!(z0 >= t.u_k - slack))
          fail(tag + ": success mean " + z0.str() + " below " + (t.u_k - slack).str());
      } else {
        if (!(z0 <= (kOne - t.u_k) + slack))
          fail(tag + ": success mean " + z0.str() + " above " + ((kOne - t.u_k) + slack).str());
      }
    }
  }
  return out;
}

}  // namespace hats

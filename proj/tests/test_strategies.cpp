#include "doctest.h"

#include <memory>

#include "hats/mixed_strategy.hpp"
#include "hats/strategies.hpp"
#include "hats/team_strategy.hpp"

using namespace hats;

namespace {

HatAssignment bits_of(std::initializer_list<int> colors) {
  BitVec b(colors.size());
  size_t i = 0;
  for (int c : colors) b.set(i++, c != 0);
  return HatAssignment::binary(std::move(b), Tail::ConstantBlack);
}

// The strategy catalog exercised by the structural property tests.
std::vector<std::pair<std::string, std::unique_ptr<GuessRule>>> catalog() {
  std::vector<std::pair<std::string, std::unique_ptr<GuessRule>>> cat;
  cat.emplace_back("constant-0", StrategySpec::preset("constant").build());
  cat.emplace_back("random", StrategySpec::preset("random").build());
  cat.emplace_back("even-odd-4", StrategySpec::preset("even-odd-4").build());
  cat.emplace_back("pairs", StrategySpec::preset("pairs").build());
  cat.emplace_back("mod2-groups", std::make_unique<ModKGroupsStrategy>(2));
  cat.emplace_back("block-powers2", StrategySpec::preset("block-powers2").build());
  {
    StrategySpec team;
    team.kind = "team";
    team.params = {{"u", "3/4"}, {"teams", 6}, {"eps", "harmonic"}};
    cat.emplace_back("team-3:4", team.build());
    team.params = {{"u", "3/4"}, {"l", "1/4"}, {"teams", 6}, {"mode", "alternating"}};
    cat.emplace_back("alternating", team.build());
  }
  {
    StrategySpec mixed = StrategySpec::preset("mixed");
    mixed.params["noise_bits"] = 10;
    mixed.params["teams"] = 4;
    cat.emplace_back("mixed", mixed.build());
  }
  return cat;
}

}  // namespace

TEST_CASE("even-odd on two players: both right or both wrong") {
  EvenOddGroupsStrategy eo(2);
  RandomSource rng(0);
  {
    HatAssignment hats = bits_of({0, 0});
    CHECK(eo.guess(1, hats, rng) == 0);
    CHECK(eo.guess(2, hats, rng) == 0);  // both correct
  }
  {
    HatAssignment hats = bits_of({1, 0});
    CHECK(eo.guess(1, hats, rng) == 0);  // wrong
    CHECK(eo.guess(2, hats, rng) == 1);  // wrong
  }
}

TEST_CASE("even-odd on three players follows the parity formula") {
  EvenOddGroupsStrategy eo(3);
  RandomSource rng(0);
  HatAssignment hats = bits_of({1, 1, 0});
  // Guess of player i is the parity of the other hats.
  CHECK(eo.guess(1, hats, rng) == 1);
  CHECK(eo.guess(2, hats, rng) == 1);
  CHECK(eo.guess(3, hats, rng) == 0);  // all three correct
  BitVec correct;
  eo.evaluate(hats, 3, rng, correct, nullptr);
  CHECK(correct.count() == 3);
}

TEST_CASE("within a group, everyone is right iff the white count is even") {
  EvenOddGroupsStrategy eo(4);
  RandomSource rng(0);
  BitVec correct;
  for (uint32_t pattern = 0; pattern < 256; ++pattern) {
    BitVec b(8);
    for (int i = 0; i < 8; ++i) b.set(i, (pattern >> i) & 1);
    HatAssignment hats = HatAssignment::binary(std::move(b), Tail::Unsampled);
    eo.evaluate(hats, 8, rng, correct, nullptr);
    for (int g = 0; g < 2; ++g) {
      int whites = 0, right = 0;
      for (int i = 0; i < 4; ++i) {
        whites += (pattern >> (4 * g + i)) & 1;
        right += correct.get(4 * g + i);
      }
      CHECK(right == (whites % 2 == 0 ? 4 : 0));
    }
  }
}

TEST_CASE("pairs: the stated guesses and the sure half") {
  PairsStrategy pairs;
  RandomSource rng(0);
  {
    HatAssignment hats = bits_of({0, 0});
    CHECK(pairs.guess(1, hats, rng) == 0);  // correct
    CHECK(pairs.guess(2, hats, rng) == 1);  // wrong
  }
  {
    HatAssignment hats = bits_of({0, 1});
    CHECK(pairs.guess(1, hats, rng) == 1);  // wrong
    CHECK(pairs.guess(2, hats, rng) == 1);  // correct
  }
  // Exactly half correct for every assignment, exhaustively at n = 10.
  BitVec correct;
  for (uint32_t pattern = 0; pattern < 1024; ++pattern) {
    BitVec b(10);
    for (int i = 0; i < 10; ++i) b.set(i, (pattern >> i) & 1);
    HatAssignment hats = HatAssignment::binary(std::move(b), Tail::Unsampled);
    pairs.evaluate(hats, 10, rng, correct, nullptr);
    CHECK(correct.count() == 5);
    for (int p = 0; p < 5; ++p)
      CHECK(static_cast<int>(correct.get(2 * p)) + static_cast<int>(correct.get(2 * p + 1)) == 1);
  }
}

TEST_CASE("mod-2 sum with target 0 gives the even-odd guesses") {
  RandomSource rng(0);
  for (uint64_t n : {2ull, 3ull, 4ull}) {
    ModKSumStrategy sum2(2, 0, n);
    EvenOddGroupsStrategy eo(n);
    for (uint32_t pattern = 0; pattern < (1u << n); ++pattern) {
      BitVec b(n);
      for (uint64_t i = 0; i < n; ++i) b.set(i, (pattern >> i) & 1);
      HatAssignment hats = HatAssignment::binary(std::move(b), Tail::Unsampled);
      for (uint64_t i = 1; i <= n; ++i) CHECK(sum2.guess(i, hats, rng) == eo.guess(i, hats, rng));
    }
  }
}

TEST_CASE("mod-3 sum on two players: the worked example and the exact law") {
  ModKSumStrategy sum(3, 0, 2);
  RandomSource rng(0);
  HatAssignment hats = HatAssignment::finite(ColorSpace::finite(3), {1, 2});
  CHECK(sum.guess(1, hats, rng) == 1);  // (0 - 2) mod 3, correct
  CHECK(sum.guess(2, hats, rng) == 2);  // (0 - 1) mod 3, correct

  // Brute-force oracle over all 9 assignments: all correct iff sum = 0 mod 3.
  int all_correct = 0;
  for (uint64_t a = 0; a < 3; ++a) {
    for (uint64_t b = 0; b < 3; ++b) {
      HatAssignment h = HatAssignment::finite(ColorSpace::finite(3), {a, b});
      bool p1 = sum.guess(1, h, rng) == a;
      bool p2 = sum.guess(2, h, rng) == b;
      CHECK(p1 == p2);  // all-or-nothing
      all_correct += p1 && p2;
    }
  }
  CHECK(all_correct == 3);  // probability exactly 1/3
}

TEST_CASE("mod-2 groups coincide with pairs") {
  ModKGroupsStrategy groups(2);
  PairsStrategy pairs;
  RandomSource rng(0);
  for (uint32_t pattern = 0; pattern < 16; ++pattern) {
    BitVec b(4);
    for (int i = 0; i < 4; ++i) b.set(i, (pattern >> i) & 1);
    HatAssignment hats = HatAssignment::binary(std::move(b), Tail::Unsampled);
    for (uint64_t i = 1; i <= 4; ++i) CHECK(groups.guess(i, hats, rng) == pairs.guess(i, hats, rng));
  }
}

TEST_CASE("mod-3 groups: all-equal hats make exactly the first member correct") {
  ModKGroupsStrategy groups(3);
  RandomSource rng(0);
  HatAssignment hats = HatAssignment::finite(ColorSpace::finite(3), {2, 2, 2});
  BitVec correct;
  groups.evaluate(hats, 3, rng, correct, nullptr);
  CHECK(correct.get(0));
  CHECK_FALSE(correct.get(1));
  CHECK_FALSE(correct.get(2));
}

TEST_CASE("mod-4 groups: exactly a quarter correct on sampled assignments") {
  ModKGroupsStrategy groups(4);
  RandomSource rng(31);
  BitVec correct;
  for (uint64_t run = 0; run < 50; ++run) {
    RandomSource r = RandomSource::for_run(31, run);
    HatAssignment hats = sample_assignment(ColorSpace::finite(4), 12, r);
    groups.evaluate(hats, 12, r, correct, nullptr);
    CHECK(correct.count() == 3);
  }
}

TEST_CASE("block strategy: all-even blocks make the whole prefix correct") {
  StrategySpec s;
  s.kind = "block";
  s.params = {{"ends", std::vector<uint64_t>{2, 6, 24}}};
  auto rule = s.build();
  RandomSource rng(0);
  BitVec b(24);  // all black: every block has an even (zero) white count
  HatAssignment hats = HatAssignment::binary(std::move(b), Tail::Unsampled);
  BitVec correct;
  rule->evaluate(hats, 24, rng, correct, nullptr);
  CHECK(correct.count() == 24);
}

TEST_CASE("block strategy: on a win the block-end mean clears 1 - n_{j-1}/n_j") {
  auto rule = StrategySpec::preset("block-powers2").build();
  auto* block = dynamic_cast<BlockStrategy*>(rule.get());
  REQUIRE(block != nullptr);
  for (uint64_t run = 0; run < 20; ++run) {
    RandomSource rng = RandomSource::for_run(37, run);
    HatAssignment hats = sample_assignment(ColorSpace::binary(), block->horizon(1024), rng);
    BitVec correct;
    RunArtifacts art;
    rule->evaluate(hats, 1024, rng, correct, &art);
    for (size_t j = 1; j <= art.block_win.size(); ++j) {
      uint64_t end = block->schedule().end(j);
      if (end > 1024 || !art.block_win[j - 1]) continue;
      uint64_t count = correct.count_prefix(end);
      CHECK(count >= end - block->schedule().end(j - 1));
    }
  }
}

TEST_CASE("block schedules reject non-increasing ends") {
  CHECK_THROWS(BlockSchedule::explicit_ends({4, 4}));
  CHECK_THROWS(BlockSchedule::explicit_ends({4, 2}));
  CHECK_THROWS(BlockSchedule::explicit_ends({}));
}

TEST_CASE("strategy construction rejects bad parameters") {
  CHECK_THROWS(EvenOddGroupsStrategy(0));
  CHECK_THROWS(ModKSumStrategy(1, 0, 4));
  CHECK_THROWS(ModKSumStrategy(3, 3, 4));
  CHECK_THROWS(ModKGroupsStrategy(1));
  CHECK_THROWS(ConstantStrategy(2, ColorSpace::binary()));
}

TEST_CASE("window soundness: hats outside the declared window never matter") {
  RandomSource rng = RandomSource::for_run(41, 0);
  for (const auto& [label, rule] : catalog()) {
    CAPTURE(label);
    uint64_t h = rule->horizon(64);
    for (uint64_t i = 1; i <= 64; i += 7) {
      std::vector<uint64_t> w = rule->window(i);
      std::vector<bool> in_window(h + 2, false);
      for (uint64_t p : w) {
        CHECK(p != i);  // the player never sees their own hat
        if (p <= h + 1) in_window[p] = true;
      }
      HatAssignment hats = sample_assignment(ColorSpace::binary(), h, rng);
      uint64_t base = rule->guess(i, hats, rng);
      // Flipping the own hat must not change the guess.
      hats.set_color(i, 1 - hats.color(i));
      CHECK(rule->guess(i, hats, rng) == base);
      hats.set_color(i, 1 - hats.color(i));
      // Flipping any sampled hat outside the window must not change it.
      for (uint64_t p = 1; p <= h; p += (p < 70 ? 1 : 97)) {
        if (p == i || in_window[p]) continue;
        hats.set_color(p, 1 - hats.color(p));
        CHECK(rule->guess(i, hats, rng) == base);
        hats.set_color(p, 1 - hats.color(p));
      }
    }
  }
}

TEST_CASE("bulk evaluation agrees with per-player guesses") {
  for (const auto& [label, rule] : catalog()) {
    CAPTURE(label);
    const uint64_t n = 200;
    uint64_t h = rule->horizon(n);
    for (uint64_t run = 0; run < 3; ++run) {
      RandomSource rng = RandomSource::for_run(43, run);
      HatAssignment hats = sample_assignment(ColorSpace::binary(), h, rng);
      BitVec bulk;
      rule->evaluate(hats, n, rng, bulk, nullptr);
      for (uint64_t i = 1; i <= n; ++i) {
        bool right = rule->guess(i, hats, rng) == hats.color(i);
        CHECK(bulk.get(i - 1) == right);
      }
    }
  }
}

TEST_CASE("horizons cover the requested players") {
  for (const auto& [label, rule] : catalog()) {
    CAPTURE(label);
    for (uint64_t n : {1ull, 2ull, 7ull, 64ull, 1000ull}) CHECK(rule->horizon(n) >= n);
  }
}

TEST_CASE("truncation exactness: a longer simulation restricts to the shorter one") {
  for (const auto& [label, rule] : catalog()) {
    CAPTURE(label);
    RandomSource rng = RandomSource::for_run(47, 0);
    const uint64_t n1 = 1000, n2 = 2000;
    HatAssignment h1 = sample_assignment(ColorSpace::binary(), rule->horizon(n1), rng);
    HatAssignment h2 = sample_assignment(ColorSpace::binary(), rule->horizon(n2), rng);
    BitVec c1, c2;
    rule->evaluate(h1, n1, rng, c1, nullptr);
    rule->evaluate(h2, n2, rng, c2, nullptr);
    for (uint64_t i = 0; i < n1; ++i) CHECK(c1.get(i) == c2.get(i));
  }
}

TEST_CASE("team strategy: recovery squads pair off and gamblers chain even-odd") {
  StrategySpec s;
  s.kind = "team";
  s.params = {{"u", "3/4"}, {"teams", 3}, {"eps", "harmonic"}};
  auto rule = s.build();
  auto* team = dynamic_cast<TeamStrategy*>(rule.get());
  REQUIRE(team != nullptr);
  const TeamPlan& plan = team->plan();
  REQUIRE(plan.teams.size() == 3);
  CHECK(plan.teams[0].n == 0);
  CHECK(plan.teams[0].g == 0);
  CHECK(plan.teams[0].b == 1);
  CHECK(plan.teams[1].alpha == Rational(1, 3));  // u_1 = 5/8 under the default schedule

  // On an all-black assignment every gambler block is even, so the whole
  // gambler squad wins and each recovery pair splits.
  uint64_t n = plan.teams[2].end();
  BitVec b(n);
  HatAssignment hats = HatAssignment::binary(std::move(b), Tail::Unsampled);
  BitVec correct;
  RunArtifacts art;
  RandomSource rng(0);
  rule->evaluate(hats, n, rng, correct, &art);
  for (const auto& t : plan.teams) {
    if (t.s > 0) CHECK(art.team_event[t.k]);
    for (uint64_t i = t.n + 1; i <= t.n + t.g; ++i) CHECK(correct.get(i - 1));
    uint64_t rec_correct = 0;
    for (uint64_t i = t.n + t.g + 1; i <= t.end(); ++i) rec_correct += correct.get(i - 1);
    CHECK(rec_correct * 2 == t.r);
  }
}

TEST_CASE("win-mode teams: an odd first block loses whole and demotes the rest to pairs") {
  TeamPlan plan = generate_plan(Rational(3, 4), 3, TeamMode::Win, {.eps = "harmonic"});
  TeamStrategy rule(plan);
  const TeamParams& t2 = plan.teams[2];
  REQUIRE(t2.b == 2);
  uint64_t n = plan.teams[2].end();
  BitVec b(n);
  b.set(t2.n, true);  // one white hat inside the first gambler block of team 2
  HatAssignment hats = HatAssignment::binary(std::move(b), Tail::Unsampled);
  BitVec correct;
  RunArtifacts art;
  RandomSource rng(0);
  rule.evaluate(hats, n, rng, correct, &art);
  CHECK_FALSE(art.team_event[2]);
  // The odd block played even-odd and lost entirely.
  for (uint64_t i = t2.n + 1; i <= t2.n + t2.s; ++i) CHECK_FALSE(correct.get(i - 1));
  // The second block fell back to pairs: exactly half correct.
  uint64_t later = 0;
  for (uint64_t i = t2.n + t2.s + 1; i <= t2.n + t2.g; ++i) later += correct.get(i - 1);
  CHECK(later * 2 == t2.g - t2.s);
}

TEST_CASE("lose-mode teams mirror the trigger: an even first block stops the chain") {
  TeamPlan plan = generate_plan(Rational(3, 4), 3, TeamMode::Lose, {.eps = "harmonic"});
  TeamStrategy rule(plan);
  uint64_t n = plan.teams[2].end();
  // All-black hats: every block parity is even.  Under lose-mode the first
  // block plays even-odd (vacuous trigger), wins, and the chain stops.
  BitVec b(n);
  HatAssignment hats = HatAssignment::binary(std::move(b), Tail::Unsampled);
  BitVec correct;
  RunArtifacts art;
  RandomSource rng(0);
  rule.evaluate(hats, n, rng, correct, &art);
  const TeamParams& t2 = plan.teams[2];
  REQUIRE(t2.b == 2);  // two gambler blocks from the third team on
  CHECK_FALSE(art.team_event[2]);  // the lose-gamble needs all-odd blocks
  // First block played even-odd on an even block: all of it is correct.
  for (uint64_t i = t2.n + 1; i <= t2.n + t2.s; ++i) CHECK(correct.get(i - 1));
  // The second block fell back to pairs: exactly half correct.
  uint64_t later = 0;
  for (uint64_t i = t2.n + t2.s + 1; i <= t2.n + t2.g; ++i) later += correct.get(i - 1);
  CHECK(later * 2 == t2.g - t2.s);
}

TEST_CASE("mixed strategy: the active re-indexing skips exactly the squares") {
  CHECK(MixedStrategy::is_inactive(1));
  CHECK(MixedStrategy::is_inactive(4));
  CHECK_FALSE(MixedStrategy::is_inactive(2));
  uint64_t a = 0;
  for (uint64_t raw = 1; raw <= 10000; ++raw) {
    if (MixedStrategy::is_inactive(raw)) continue;
    ++a;
    CHECK(MixedStrategy::raw_to_active(raw) == a);
    CHECK(MixedStrategy::active_to_raw(a) == raw);
  }
}

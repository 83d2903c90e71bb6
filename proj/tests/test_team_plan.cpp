#include "doctest.h"

#include "hats/team_plan.hpp"

using namespace hats;

TEST_CASE("block counts follow the floor-log table") {
  CHECK(blocks_for_team(0) == 1);
  CHECK(blocks_for_team(1) == 1);
  for (uint64_t k = 2; k <= 5; ++k) CHECK(blocks_for_team(k) == 2);
  CHECK(blocks_for_team(6) == 3);
  CHECK(blocks_for_team(13) == 3);
  CHECK(blocks_for_team(14) == 4);
}

TEST_CASE("the success probabilities 2^-b sum past any bound") {
  Rational sum(0);
  uint64_t m = 0;
  while (sum <= Rational(3) && m < 10000) sum += Rational::dyadic(blocks_for_team(m)), ++m;
  CHECK(sum > Rational(3));
  CHECK(m <= 10000);
}

TEST_CASE("default target schedule below 1: monotone, inside (1/2, u)") {
  Rational u(3, 4);
  Rational prev(0);
  for (uint64_t k = 0; k <= 1000; ++k) {
    Rational uk = default_u_schedule(u, k);
    CHECK(uk > Rational(1, 2));
    CHECK(uk < u);
    CHECK(uk >= prev);
    prev = uk;
  }
  // The worked value: u_1 = 3/4 - (1/4)/2 = 5/8.
  CHECK(default_u_schedule(u, 1) == Rational(5, 8));
}

TEST_CASE("default target schedule at 1: (1-u_k) b_k grows without bound") {
  Rational prev_w(0);
  for (uint64_t k = 0; k <= 1000; ++k) {
    Rational uk = default_u_schedule(Rational(1), k);
    CHECK(uk > Rational(1, 2));
    CHECK(uk < Rational(1));
    uint64_t b = blocks_for_team(k);
    Rational w = (Rational(1) - uk) * Rational::from_uint(b);
    CHECK(w >= prev_w);  // never shrinks along the schedule
    prev_w = w;
    // Explicit divergence witness: w >= sqrt(b)/5.
    CHECK(w * w * Rational(25) >= Rational::from_uint(b));
  }
  // It actually grows: the value at k = 1000 exceeds the value at k = 0.
  Rational w0 = (Rational(1) - default_u_schedule(Rational(1), 0)) * Rational(1);
  Rational w1000 = (Rational(1) - default_u_schedule(Rational(1), 1000)) *
                   Rational::from_uint(blocks_for_team(1000));
  CHECK(w1000 > w0);
}

TEST_CASE("schedule denominators stay desk-sized") {
  for (uint64_t k = 0; k <= 100; ++k) {
    CHECK(default_u_schedule(Rational(3, 4), k).den() < 1000000);
    CHECK(default_u_schedule(Rational(1), k).den() < 1000000);
  }
  CHECK_THROWS(default_u_schedule(Rational(1, 2), 0));
  CHECK_THROWS(default_u_schedule(Rational(1, 4), 0));
}

TEST_CASE("explicit schedule matching the worked example: alpha_1 = 1/2") {
  // u_k = 3/4 - 1/(4(k+2)) gives u_1 = 2/3 and alpha_1 = 1/2.
  PlanOptions options;
  options.eps = "harmonic";
  for (uint64_t k = 0; k < 6; ++k)
    options.explicit_u.push_back(Rational(3, 4) - Rational(1, 4) / Rational::from_uint(k + 2));
  CHECK(options.explicit_u[1] == Rational(2, 3));
  TeamPlan plan = generate_plan(Rational(3, 4), 6, TeamMode::Win, options);
  CHECK(plan.teams[1].u_k == Rational(2, 3));
  CHECK(plan.teams[1].alpha == Rational(1, 2));
  CHECK(validate_plan(plan).pass);
}

TEST_CASE("generated plans pass the independent checker across targets") {
  for (const char* u : {"2/3", "3/4", "9/10", "1"}) {
    TeamPlan plan = generate_plan(Rational::parse(u), 12, TeamMode::Win, {.eps = "harmonic"});
    PlanValidation v = validate_plan(plan);
    CAPTURE(u);
    CAPTURE(v.first_violation);
    CHECK(v.pass);
    CHECK(plan.teams.size() == 12);
    // Monotone growth and vanishing block share.
    Rational prev_ratio(1);
    for (const auto& t : plan.teams) {
      if (t.k >= 1) {
        CHECK(t.n < t.end());
        Rational ratio = t.alpha / Rational::from_uint(t.b);
        if (t.k >= 4) CHECK(ratio <= prev_ratio);
        prev_ratio = ratio;
      }
    }
  }
  // Dyadic epsilon schedule variant.
  TeamPlan plan = generate_plan(Rational(3, 4), 6, TeamMode::Win, {.eps = "dyadic"});
  CHECK(validate_plan(plan).pass);
}

TEST_CASE("the half target is the pairs strategy, out-of-range targets are rejected") {
  TeamPlan plan = generate_plan(Rational(1, 2), 5);
  CHECK(plan.pairs_degenerate);
  CHECK(plan.teams.empty());
  CHECK(validate_plan(plan).pass);
  CHECK_THROWS(generate_plan(Rational(1, 4), 5));
  CHECK_THROWS(generate_plan(Rational(5, 4), 5));
  CHECK_THROWS(generate_plan(Rational(3, 4), 0));
}

TEST_CASE("first teams of the default 3/4 plan: minimal even recovery squads") {
  TeamPlan plan = generate_plan(Rational(3, 4), 3);
  const TeamParams& t0 = plan.teams[0];
  CHECK(t0.n == 0);
  CHECK(t0.g == 0);
  CHECK(t0.alpha == Rational(0));
  CHECK(t0.b == 1);
  // alpha_1 = 1/3, so the divisibility constraint needs r_0 * 1/3 even:
  // the smallest admissible even r_0 is 6.
  CHECK(plan.teams[1].n == 6);
  CHECK(plan.teams[1].alpha == Rational(1, 3));
  // Every smaller even candidate must violate a constraint.
  for (uint64_t r = 2; r < 6; r += 2)
    CHECK_FALSE((Rational::from_uint(r) * plan.teams[1].alpha).is_even_integer());
}

TEST_CASE("tampered plans are flagged by the checker") {
  TeamPlan plan = generate_plan(Rational(3, 4), 5);
  REQUIRE(validate_plan(plan).pass);
  {
    TeamPlan bad = plan;
    bad.teams[2].s += 1;  // odd block size
    PlanValidation v = validate_plan(bad);
    CHECK_FALSE(v.pass);
    CHECK(v.first_violation.find("s_k") != std::string::npos);
  }
  {
    TeamPlan bad = plan;
    bad.teams[1].r = 2;  // far below the sandwich bound
    PlanValidation v = validate_plan(bad);
    CHECK_FALSE(v.pass);
    CHECK(v.first_violation.find("sandwich") != std::string::npos);
  }
  {
    TeamPlan bad = plan;
    bad.teams[3].u_k = Rational(4, 5);  // above the target 3/4
    CHECK_FALSE(validate_plan(bad).pass);
  }
  {
    TeamPlan bad = plan;
    bad.teams[2].n += 2;  // breaks the chain n_{k+1} = n_k + g_k + r_k
    CHECK_FALSE(validate_plan(bad).pass);
  }
}

TEST_CASE("alternating plans interleave win and lose teams and validate") {
  TeamPlan plan = generate_alternating_plan(Rational(1, 4), Rational(3, 4), 8);
  CHECK(validate_plan(plan).pass);
  REQUIRE(plan.teams.size() == 8);
  for (const auto& t : plan.teams)
    CHECK(t.mode == (t.k % 2 == 0 ? TeamMode::Win : TeamMode::Lose));
  CHECK(plan.l.has_value());

  // Degenerate corners.
  CHECK(generate_alternating_plan(Rational(1, 2), Rational(1, 2), 4).pairs_degenerate);
  TeamPlan win_only = generate_alternating_plan(Rational(1, 2), Rational(3, 4), 4);
  for (const auto& t : win_only.teams) CHECK(t.mode == TeamMode::Win);
  TeamPlan lose_only = generate_alternating_plan(Rational(1, 4), Rational(1, 2), 4);
  for (const auto& t : lose_only.teams) CHECK(t.mode == TeamMode::Lose);
  CHECK(validate_plan(lose_only).pass);
  CHECK_THROWS(generate_alternating_plan(Rational(3, 4), Rational(3, 4), 4));
}

TEST_CASE("plans serialize to JSON and back without loss") {
  TeamPlan plan = generate_plan(Rational(9, 10), 7, TeamMode::Win, {.eps = "dyadic"});
  nlohmann::json j = plan.to_json();
  TeamPlan back = TeamPlan::from_json(j);
  CHECK(back.u == plan.u);
  CHECK(back.teams.size() == plan.teams.size());
  for (size_t i = 0; i < plan.teams.size(); ++i) {
    CHECK(back.teams[i].n == plan.teams[i].n);
    CHECK(back.teams[i].g == plan.teams[i].g);
    CHECK(back.teams[i].r == plan.teams[i].r);
    CHECK(back.teams[i].s == plan.teams[i].s);
    CHECK(back.teams[i].u_k == plan.teams[i].u_k);
    CHECK(back.teams[i].alpha == plan.teams[i].alpha);
    CHECK(back.teams[i].eps == plan.teams[i].eps);
  }
  CHECK(validate_plan(back).pass);
}

TEST_CASE("u = 1 plans keep (1-u_k) b_k nondecreasing") {
  TeamPlan plan = generate_plan(Rational(1), 12);
  CHECK(validate_plan(plan).pass);
  Rational prev(0);
  for (const auto& t : plan.teams) {
    if (t.k == 0) continue;
    Rational w = (Rational(1) - t.u_k) * Rational::from_uint(t.b);
    CHECK(w >= prev);
    prev = w;
  }
}

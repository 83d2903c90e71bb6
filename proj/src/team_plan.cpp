#include "hats/team_plan.hpp"

#include <cmath>
#include <stdexcept>

#include "hats/json_util.hpp"

namespace hats {

namespace {

const Rational kHalf(1, 2);
const Rational kOne(1);

Rational rational_floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return Rational(mpq_class(q));
}

uint64_t ceil_sqrt(uint64_t v) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r < v) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= v) --r;
  return r;
}

Rational alpha_from_u(const Rational& u_k) { return (u_k - kHalf) / (kOne - u_k); }

}  // namespace

Rational harmonic_eps_schedule(uint64_t k) { return Rational::ratio(1, k + 2); }

Rational dyadic_eps_schedule(uint64_t k) {
  if (k + 4 > 62) return Rational::dyadic(62);
  return Rational::dyadic(static_cast<unsigned>(k + 4));
}

Rational eps_schedule(const std::string& name, uint64_t k) {
  if (name == "harmonic") return harmonic_eps_schedule(k);
  if (name == "dyadic") return dyadic_eps_schedule(k);
  throw std::invalid_argument("unknown eps schedule '" + name + "'");
}

Rational default_u_schedule(const Rational& u, uint64_t k) {
  if (u <= kHalf || u > kOne)
    throw std::invalid_argument("u schedule: target must satisfy 1/2 < u <= 1, got " + u.str());
  uint64_t b = blocks_for_team(k);
  if (u == kOne) {
    // alpha_k = b / (2*ceil(sqrt(b))): alpha_k/b_k = 1/(2*ceil(sqrt(b)))
    // is nonincreasing and (1-u_k)*b_k = 2*b*ceil(sqrt b)/(2*ceil(sqrt b)+b)
    // is nondecreasing and unbounded.
    Rational alpha = Rational::ratio(b, 2 * ceil_sqrt(b));
    return (kHalf + alpha) / (kOne + alpha);
  }
  // u_k = u - (u - 1/2)/(b_k + 1): monotone in b_k with
  // alpha_k/b_k = (u - 1/2) / ((1-u)(b_k+1) + (u - 1/2)) nonincreasing.
  return u - (u - kHalf) / Rational::from_uint(b + 1);
}

void PlanValidation::add(const std::string& what, bool ok, const std::string& detail) {
  checks.push_back({what, ok, detail});
  if (!ok) {
    pass = false;
    if (first_violation.empty()) first_violation = what + (detail.empty() ? "" : ": " + detail);
  }
}

nlohmann::json PlanValidation::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"check", c.what}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"pass", pass}, {"first_violation", first_violation}, {"checks", arr}};
}

namespace {

struct ScheduleView {
  const Rational* u_target;   // win target
  const Rational* l_target;   // lose target (alternating), may be null
  bool alternating;
  const PlanOptions* options;

  TeamMode mode_of(uint64_t k) const {
    if (!alternating) return base_mode;
    return k % 2 == 0 ? TeamMode::Win : TeamMode::Lose;
  }
  Rational target_of(uint64_t k) const {
    if (!alternating) return *u_target;
    return k % 2 == 0 ? *u_target : kOne - *l_target;
  }
  Rational u_of(uint64_t k) const {
    if (options && k < options->explicit_u.size()) {
      const Rational& v = options->explicit_u[k];
      if (v <= kHalf || v >= target_of(k))
        throw std::invalid_argument("u schedule violates 1/2 < u_k < target at k=" +
                                    std::to_string(k));
      return v;
    }
    return default_u_schedule(target_of(k), k);
  }
  Rational alpha_of(uint64_t k) const { return k == 0 ? Rational(0) : alpha_from_u(u_of(k)); }
  TeamMode base_mode = TeamMode::Win;
};

TeamPlan generate_impl(const ScheduleView& sched, uint64_t num_teams, const PlanOptions& options,
                       const Rational& u, std::optional<Rational> l) {
  if (num_teams < 1) throw std::invalid_argument("generate_plan: need at least one team");
  TeamPlan plan;
  plan.u = u;
  plan.l = l;
  plan.eps_schedule = options.eps;

  uint64_t n = 0;
  for (uint64_t k = 0; k < num_teams; ++k) {
    TeamParams t;
    t.k = k;
    t.n = n;
    t.b = blocks_for_team(k);
    t.mode = sched.mode_of(k);
    t.u_k = sched.u_of(k);
    t.alpha = sched.alpha_of(k);
    t.eps = eps_schedule(options.eps, k);

    Rational g_exact = t.alpha * Rational::from_uint(n);
    t.g = g_exact.to_uint64();  // integral by the previous step's divisibility choice
    Rational s_exact = g_exact / Rational::from_uint(t.b);
    if (!s_exact.is_even_integer())
      throw std::logic_error("generate_plan: block size not an even integer at k=" +
                             std::to_string(k));
    t.s = s_exact.to_uint64();

    uint64_t m = n + t.g;
    Rational eps_next = eps_schedule(options.eps, k + 1);
    Rational alpha_next = sched.alpha_of(k + 1);
    uint64_t b_next = blocks_for_team(k + 1);
    Rational ratio_next = alpha_next / Rational::from_uint(b_next);

    // Minimal even r with eps_next * r strictly above m*(1/2 - eps_next),
    // stepped by 2 until (m + r) * alpha_{k+1}/b_{k+1} is an even integer.
    Rational bound = Rational::from_uint(m) * (kHalf - eps_next) / eps_next;
    uint64_t r = rational_floor(bound).to_uint64() + 1;
    if (r % 2 == 1) ++r;
    if (r < 2) r = 2;
    uint64_t guard = 0;
    while (!(Rational::from_uint(m + r) * ratio_next).is_even_integer()) {
      r += 2;
      if (++guard > (1ULL << 24))
        throw std::runtime_error("generate_plan: no admissible recovery size found");
    }
    t.r = r;

    plan.teams.push_back(t);
    n = m + r;

    if (k + 1 == num_teams) {
      plan.next_alpha = alpha_next;
      plan.next_b = b_next;
      plan.next_eps = eps_next;
    }
  }
  return plan;
}

}  // namespace

TeamPlan generate_plan(const Rational& u, uint64_t num_teams, TeamMode mode,
                       const PlanOptions& options) {
  if (u < kHalf || u > kOne)
    throw std::invalid_argument("generate_plan: target must satisfy 1/2 <= u <= 1");
  if (u == kHalf) {
    TeamPlan plan;
    plan.u = u;
    plan.pairs_degenerate = true;
    plan.eps_schedule = options.eps;
    return plan;
  }
  ScheduleView sched;
  sched.u_target = &u;
  sched.l_target = nullptr;
  sched.alternating = false;
  sched.base_mode = mode;
  sched.options = &options;
  return generate_impl(sched, num_teams, options, u, std::nullopt);
}

TeamPlan generate_alternating_plan(const Rational& l, const Rational& u, uint64_t num_teams,
                                   const PlanOptions& options) {
  if (l < Rational(0) || l > kHalf || u < kHalf || u > kOne)
    throw std::invalid_argument("generate_alternating_plan: need 0 <= l <= 1/2 <= u <= 1");
  if (l == kHalf && u == kHalf) {
    TeamPlan plan;
    plan.u = u;
    plan.l = l;
    plan.pairs_degenerate = true;
    plan.eps_schedule = options.eps;
    return plan;
  }
  if (l == kHalf) return generate_plan(u, num_teams, TeamMode::Win, options);
  if (u == kHalf) {
    TeamPlan plan = generate_plan(kOne - l, num_teams, TeamMode::Lose, options);
    plan.l = l;
    return plan;
  }
  ScheduleView sched;
  sched.u_target = &u;
  Rational lv = l;
  sched.l_target = &lv;
  sched.alternating = true;
  sched.options = &options;
  return generate_impl(sched, num_teams, options, u, l);
}

PlanValidation validate_plan(const TeamPlan& plan) {
  PlanValidation v;
  if (plan.pairs_degenerate) {
    v.add("degenerate plan has no teams", plan.teams.empty());
    return v;
  }
  v.add("has teams", !plan.teams.empty());
  if (plan.teams.empty()) return v;

  uint64_t expected_n = 0;
  for (size_t idx = 0; idx < plan.teams.size(); ++idx) {
    const TeamParams& t = plan.teams[idx];
    std::string at = " (team " + std::to_string(t.k) + ")";

    v.add("team indices consecutive" + at, t.k == idx);
    v.add("n_k chains from n_0 = 0" + at, t.n == expected_n,
          std::to_string(t.n) + " vs " + std::to_string(expected_n));

    // b_k = floor(log2(k+2)), re-derived by repeated halving.
    uint64_t b_ref = 0;
    for (uint64_t x = t.k + 2; x > 1; x >>= 1) ++b_ref;
    v.add("b_k = floor(log2(k+2))" + at, t.b == b_ref);
    v.add("b_k positive" + at, t.b >= 1);

    Rational target = t.mode == TeamMode::Win ? plan.u : (plan.l ? kOne - *plan.l : plan.u);
    if (t.k == 0) {
      v.add("alpha_0 = 0", t.alpha == Rational(0));
    } else {
      v.add("alpha_k = (u_k - 1/2)/(1 - u_k)" + at,
            t.alpha == (t.u_k - kHalf) / (kOne - t.u_k));
      v.add("1/2 < u_k" + at, t.u_k > kHalf, t.u_k.str());
      v.add("u_k < target" + at, t.u_k < target, t.u_k.str() + " vs " + target.str());
    }

    v.add("g_k = alpha_k * n_k" + at,
          Rational::from_uint(t.g) == t.alpha * Rational::from_uint(t.n));
    v.add("s_k * b_k = g_k" + at, t.s * t.b == t.g);
    v.add("s_k even" + at, t.s % 2 == 0);
    v.add("r_k even" + at, t.r % 2 == 0 && t.r >= 2);

    // Sandwich for the recovery squad, both inequalities verbatim.
    Rational eps_next =
        idx + 1 < plan.teams.size() ? plan.teams[idx + 1].eps : plan.next_eps;
    Rational total = Rational::from_uint(t.n + t.g + t.r);
    Rational lo = Rational::from_uint(t.r) * kHalf / total;
    Rational hi = (Rational::from_uint(t.r) * kHalf + Rational::from_uint(t.n + t.g)) / total;
    v.add("recovery sandwich lower" + at, kHalf - eps_next < lo,
          (kHalf - eps_next).str() + " < " + lo.str());
    v.add("recovery sandwich middle" + at, lo <= hi);
    v.add("recovery sandwich upper" + at, hi < kHalf + eps_next,
          hi.str() + " < " + (kHalf + eps_next).str());

    // Divisibility guaranteeing the next team's integral even block size.
    Rational alpha_next =
        idx + 1 < plan.teams.size() ? plan.teams[idx + 1].alpha : plan.next_alpha;
    uint64_t b_next = idx + 1 < plan.teams.size() ? plan.teams[idx + 1].b : plan.next_b;
    Rational div = total * alpha_next / Rational::from_uint(b_next);
    v.add("(n+g+r) * alpha'/b' even integer" + at, div.is_even_integer(), div.str());

    v.add("eps_k positive" + at, t.eps > Rational(0));
    if (idx > 0)
      v.add("eps nonincreasing" + at, t.eps <= plan.teams[idx - 1].eps);

    if (t.k >= 1 && target == kOne) {
      // (1 - u_k) * b_k must never shrink when the team's target is 1.
      Rational w = (kOne - t.u_k) * Rational::from_uint(t.b);
      for (size_t p = idx; p-- > 0;) {
        const TeamParams& prev = plan.teams[p];
        if (prev.mode != t.mode || prev.k == 0) continue;
        Rational wp = (kOne - prev.u_k) * Rational::from_uint(prev.b);
        v.add("(1-u_k)b_k nondecreasing" + at, w >= wp, w.str() + " vs " + wp.str());
        break;
      }
    }

    expected_n = t.n + t.g + t.r;
  }
  return v;
}

nlohmann::json TeamPlan::to_json() const {
  nlohmann::json teams_json = nlohmann::json::array();
  for (const auto& t : teams) {
    teams_json.push_back({{"k", t.k},
                          {"n", std::to_string(t.n)},
                          {"g", std::to_string(t.g)},
                          {"r", std::to_string(t.r)},
                          {"b", t.b},
                          {"s", std::to_string(t.s)},
                          {"u_k", rational_json(t.u_k)},
                          {"alpha", rational_json(t.alpha)},
                          {"eps", rational_json(t.eps)},
                          {"mode", t.mode == TeamMode::Win ? "win" : "lose"}});
  }
  nlohmann::json j{{"u", rational_json(u)},
                   {"eps_schedule", eps_schedule},
                   {"pairs_degenerate", pairs_degenerate},
                   {"teams", teams_json},
                   {"next", {{"alpha", rational_json(next_alpha)},
                             {"b", next_b},
                             {"eps", rational_json(next_eps)}}}};
  if (l) j["l"] = rational_json(*l);
  return j;
}

TeamPlan TeamPlan::from_json(const nlohmann::json& j) {
  TeamPlan plan;
  plan.u = rational_from_json(j.at("u"));
  if (j.contains("l") && !j.at("l").is_null()) plan.l = rational_from_json(j.at("l"));
  plan.eps_schedule = j.value("eps_schedule", "harmonic");
  plan.pairs_degenerate = j.value("pairs_degenerate", false);
  for (const auto& tj : j.at("teams")) {
    TeamParams t;
    t.k = tj.at("k").get<uint64_t>();
    t.n = std::stoull(tj.at("n").get<std::string>());
    t.g = std::stoull(tj.at("g").get<std::string>());
    t.r = std::stoull(tj.at("r").get<std::string>());
    t.b = tj.at("b").get<uint64_t>();
    t.s = std::stoull(tj.at("s").get<std::string>());
    t.u_k = rational_from_json(tj.at("u_k"));
    t.alpha = rational_from_json(tj.at("alpha"));
    t.eps = rational_from_json(tj.at("eps"));
    t.mode = tj.at("mode").get<std::string>() == "lose" ? TeamMode::Lose : TeamMode::Win;
    plan.teams.push_back(t);
  }
  const auto& nx = j.at("next");
  plan.next_alpha = rational_from_json(nx.at("alpha"));
  plan.next_b = nx.at("b").get<uint64_t>();
  plan.next_eps = rational_from_json(nx.at("eps"));
  return plan;
}

}  // namespace hats

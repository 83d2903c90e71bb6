#include "hats/exact.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hats/json_util.hpp"

namespace hats {

namespace {

constexpr uint64_t kJointGuard = 1ull << 24;
constexpr uint64_t kWindowGuard = 1ull << 20;

// Deterministic rules are required wherever a joint enumeration would
// otherwise have to integrate over the rule's internal randomness.  A rule is
// treated as deterministic iff its guess distributions are point masses,
// sampled at a handful of players.
bool rule_is_deterministic(const GuessRule& rule, uint64_t n) {
  for (uint64_t i = 1; i <= std::min<uint64_t>(n, 4); ++i) {
    uint64_t h = rule.horizon(i);
    BitVec bits(h);
    HatAssignment hats = HatAssignment::binary(std::move(bits), Tail::ConstantBlack);
    if (rule.guess_distribution(i, hats).mass.size() != 1) return false;
  }
  return true;
}

}  // namespace

Rational ExactDistribution::mean() const {
  Rational m(0);
  for (const auto& [v, p] : pmf) m += v * p;
  return m;
}

Rational ExactDistribution::p_exactly(const Rational& v) const {
  for (const auto& [val, p] : pmf)
    if (val == v) return p;
  return Rational(0);
}

Rational ExactDistribution::p_at_least(const Rational& alpha) const {
  Rational total(0);
  for (const auto& [val, p] : pmf)
    if (val >= alpha) total += p;
  return total;
}

void ExactDistribution::validate(uint64_t n) const {
  Rational total(0);
  for (const auto& [v, p] : pmf) {
    if (v < Rational(0) || v > Rational(1))
      throw std::logic_error("distribution value outside [0,1]: " + v.str());
    if (p < Rational(0)) throw std::logic_error("negative probability");
    // Every value is a count of correct players over n.
    Rational scaled = v * Rational::from_uint(n);
    if (!scaled.is_integer()) throw std::logic_error("value denominator does not divide n");
    total += p;
  }
  if (total != Rational(1)) throw std::logic_error("probabilities sum to " + total.str());
}

nlohmann::json ExactDistribution::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [v, p] : pmf)
    arr.push_back({{"value", rational_json(v)}, {"prob", rational_json(p)}});
  return arr;
}

std::string ExactDistribution::to_csv() const {
  std::string out = "value,prob_numerator,prob_denominator\n";
  for (const auto& [v, p] : pmf)
    out += v.str() + "," + p.num_str() + "," + p.den_str() + "\n";
  return out;
}

ExactDistribution exact_distribution(const GuessRule& rule, uint64_t n) {
  if (n < 1) throw std::invalid_argument("exact_distribution: need at least one player");
  ColorSpace space = rule.space();
  if (!space.is_finite_uniform())
    throw std::invalid_argument("exact_distribution: uniform finite color spaces only");
  if (!rule_is_deterministic(rule, n))
    throw std::invalid_argument("exact_distribution: joint enumeration needs a deterministic rule");
  uint64_t k = space.colors_for(1);
  uint64_t h = rule.horizon(n);

  uint64_t total = 1;
  for (uint64_t i = 0; i < h; ++i) {
    if (total > kJointGuard / k)
      throw std::invalid_argument("exact_distribution: K^horizon exceeds the enumeration guard");
    total *= k;
  }

  std::vector<uint64_t> scratch(h, 0);
  HatAssignment hats = HatAssignment::finite(space, scratch, Tail::ConstantBlack);
  RandomSource rng(0);
  BitVec correct;
  std::vector<uint64_t> histogram(n + 1, 0);
  std::vector<uint64_t> odo(h, 0);
  for (;;) {
    rule.evaluate(hats, n, rng, correct, nullptr);
    histogram[correct.count_prefix(n)] += 1;
    // advance the odometer
    uint64_t pos = 0;
    while (pos < h) {
      odo[pos] += 1;
      hats.set_color(pos + 1, odo[pos] % k);
      if (odo[pos] < k) break;
      odo[pos] = 0;
      ++pos;
    }
    if (pos == h) break;
  }

  ExactDistribution dist;
  for (uint64_t c = 0; c <= n; ++c) {
    if (histogram[c] == 0) continue;
    dist.pmf.push_back({Rational::ratio(c, n), Rational::ratio(histogram[c], total)});
  }
  dist.validate(n);
  return dist;
}

namespace {

// Shared window-enumeration loop: calls fn(weight of the config) with the
// scratch assignment holding each configuration of the window hats in turn.
// Hats outside the window stay black; by the declared-window contract the
// guess cannot depend on them.
template <typename Fn>
void for_each_window_config(const GuessRule& rule, uint64_t n, uint64_t i, Fn&& fn) {
  ColorSpace space = rule.space();
  if (!space.is_finite_uniform())
    throw std::invalid_argument("window enumeration: uniform finite color spaces only");
  uint64_t k = space.colors_for(1);
  std::vector<uint64_t> w = rule.window(i);
  uint64_t h = std::max(rule.horizon(n), i);
  for (uint64_t p : w) {
    if (p == i) throw std::logic_error("window contains the player itself");
    h = std::max(h, p);
  }

  uint64_t configs = 1;
  for (size_t t = 0; t < w.size(); ++t) {
    if (configs > kWindowGuard / k)
      throw std::invalid_argument("window enumeration: window too large");
    configs *= k;
  }

  std::vector<uint64_t> scratch(h, 0);
  HatAssignment hats = HatAssignment::finite(space, scratch, Tail::ConstantBlack);
  std::vector<uint64_t> odo(w.size(), 0);
  Rational weight = configs ? Rational::ratio(1, configs) : Rational(1);
  for (;;) {
    fn(hats, weight);
    size_t pos = 0;
    while (pos < w.size()) {
      odo[pos] += 1;
      hats.set_color(w[pos], odo[pos] % k);
      if (odo[pos] < k) break;
      odo[pos] = 0;
      ++pos;
    }
    if (pos == w.size()) break;
  }
}

}  // namespace

Rational exact_correct_probability(const GuessRule& rule, uint64_t n, uint64_t i) {
  if (i < 1 || i > n) throw std::invalid_argument("exact_correct_probability: player out of range");
  uint64_t k = rule.space().colors_for(i);
  Rational p(0);
  for_each_window_config(rule, n, i, [&](HatAssignment& hats, const Rational& weight) {
    // Average over the player's own hat; the guess distribution is queried
    // with the own hat in place so rules that illegally peek are not hidden.
    Rational conditional(0);
    for (uint64_t own = 0; own < k; ++own) {
      hats.set_color(i, own);
      conditional += rule.guess_distribution(i, hats).mass_at(own);
    }
    hats.set_color(i, 0);
    p += weight * conditional / Rational::from_uint(k);
  });
  return p;
}

Rational exact_mean(const GuessRule& rule, uint64_t n) {
  Rational total(0);
  for (uint64_t i = 1; i <= n; ++i) total += exact_correct_probability(rule, n, i);
  return total / Rational::from_uint(n);
}

nlohmann::json IndependenceReport::to_json() const {
  return {{"player", player}, {"configs", configs}, {"pass", pass}, {"violation", violation}};
}

IndependenceReport verify_independence(const GuessRule& rule, uint64_t n, uint64_t i) {
  IndependenceReport rep;
  rep.player = i;
  uint64_t k = rule.space().colors_for(i);
  Rational expected = Rational::ratio(1, k);
  for_each_window_config(rule, n, i, [&](HatAssignment& hats, const Rational&) {
    ++rep.configs;
    Rational conditional(0);
    for (uint64_t own = 0; own < k; ++own) {
      hats.set_color(i, own);
      conditional += rule.guess_distribution(i, hats).mass_at(own);
    }
    hats.set_color(i, 0);
    conditional /= Rational::from_uint(k);
    if (rep.pass && conditional != expected) {
      rep.pass = false;
      rep.violation = "config #" + std::to_string(rep.configs) + ": conditional " +
                      conditional.str() + " != " + expected.str();
    }
  });
  return rep;
}

// --- FiniteStrategyTable ---

uint32_t FiniteStrategyTable::correct_count(uint32_t assignment) const {
  uint32_t count = 0;
  for (uint32_t i = 0; i < n; ++i)
    count += guess_bit(i, assignment) == (((assignment >> i) & 1) != 0);
  return count;
}

namespace {

class TableRule : public GuessRule {
 public:
  explicit TableRule(FiniteStrategyTable table) : t_(std::move(table)) {}
  std::string name() const override { return "table"; }
  uint64_t horizon(uint64_t n) const override {
    if (n > t_.n) throw std::invalid_argument("table rule: fixed game size");
    return t_.n;
  }
  std::vector<uint64_t> window(uint64_t i) const override {
    std::vector<uint64_t> w;
    for (uint64_t j = 1; j <= t_.n; ++j)
      if (j != i) w.push_back(j);
    return w;
  }
  uint64_t guess(uint64_t i, const HatAssignment& hats, const RandomSource&) const override {
    uint32_t assignment = 0;
    for (uint32_t j = 0; j < t_.n; ++j) assignment |= (hats.color(j + 1) & 1u) << j;
    return t_.guess_bit(static_cast<uint32_t>(i - 1), assignment) ? 1 : 0;
  }

 private:
  FiniteStrategyTable t_;
};

}  // namespace

std::unique_ptr<GuessRule> FiniteStrategyTable::as_rule() const {
  return std::make_unique<TableRule>(*this);
}

nlohmann::json FiniteStrategyTable::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (uint32_t i = 0; i < n; ++i) t.push_back(tables[i]);
  return {{"n", n}, {"tables", t}};
}

namespace {

// Objective values of one explicit strategy tuple.
struct Objectives {
  uint64_t all_correct_assignments;  // #assignments where everyone is right
  uint32_t min_correct;              // min over assignments of the correct count
};

Objectives evaluate_tables(const FiniteStrategyTable& t) {
  Objectives o{0, t.n};
  for (uint32_t a = 0; a < (1u << t.n); ++a) {
    uint32_t c = t.correct_count(a);
    o.all_correct_assignments += c == t.n;
    o.min_correct = std::min(o.min_correct, c);
  }
  return o;
}

SearchResult search_exhaustive(uint32_t n, SearchObjective objective) {
  uint32_t table_bits = 1u << (n - 1);          // configs per player
  uint64_t per_player = 1ull << table_bits;     // functions per player
  uint64_t tuples = 1;
  for (uint32_t i = 0; i < n; ++i) tuples *= per_player;

  SearchResult best;
  best.method = "exhaustive";
  best.strategies_enumerated = tuples;
  best.optimum = Rational(-1);
  FiniteStrategyTable t;
  t.n = n;
  t.tables.assign(n, 0);
  for (uint64_t code = 0; code < tuples; ++code) {
    uint64_t rest = code;
    for (uint32_t i = 0; i < n; ++i) {
      t.tables[i] = static_cast<uint32_t>(rest % per_player);
      rest /= per_player;
    }
    Objectives o = evaluate_tables(t);
    Rational value = objective == SearchObjective::MaxAllCorrect
                         ? Rational::ratio(o.all_correct_assignments, 1ull << n)
                         : Rational::ratio(o.min_correct, n);
    if (value > best.optimum) {
      best.optimum = value;
      best.witness = t;
    }
  }
  return best;
}

// Edge-orientation view: table entry (player i, others-config c) decides
// which of the two assignments differing in coordinate i gets a correct
// guess from player i, i.e. orients one edge of the n-cube.  The correct
// count of an assignment is its in-degree.

// Max independent set in the n-cube by subset enumeration (n <= 4: 2^16).
SearchResult search_all_correct_by_independent_set(uint32_t n) {
  uint32_t vertices = 1u << n;
  std::vector<uint32_t> adj(vertices, 0);
  for (uint32_t v = 0; v < vertices; ++v)
    for (uint32_t i = 0; i < n; ++i) adj[v] |= 1u << (v ^ (1u << i));

  uint32_t best_set = 0, best_size = 0;
  for (uint32_t s = 0; s < (1u << vertices); ++s) {
    uint32_t size = static_cast<uint32_t>(std::popcount(s));
    if (size <= best_size) continue;
    bool independent = true;
    for (uint32_t v = 0; v < vertices && independent; ++v)
      if ((s >> v) & 1) independent = (s & adj[v]) == 0;
    if (independent) {
      best_set = s;
      best_size = size;
    }
  }

  // Realize the set: every member assignment must be fully correct.
  FiniteStrategyTable t;
  t.n = n;
  t.tables.assign(n, 0);
  for (uint32_t v = 0; v < vertices; ++v) {
    if (!((best_set >> v) & 1)) continue;
    for (uint32_t i = 0; i < n; ++i) {
      uint64_t c = t.config_of(v, i);
      if ((v >> i) & 1) t.tables[i] |= 1u << c;
    }
  }
  SearchResult res;
  res.method = "independent-set";
  res.strategies_enumerated = 1ull << vertices;
  res.optimum = Rational::ratio(best_size, vertices);
  res.witness = t;
  return res;
}

// Feasibility of "every assignment receives at least te correct guesses" as a
// flow problem; returns the orientation when feasible.
bool orient_with_min_indegree(uint32_t n, uint32_t target, FiniteStrategyTable& out) {
  uint32_t vertices = 1u << n;
  uint32_t edges = n * (vertices / 2);
  // Node ids: 0 = source, 1..edges = edge nodes, edges+1..edges+vertices =
  // assignment nodes, last = sink.
  uint32_t num_nodes = 2 + edges + vertices;
  uint32_t source = 0, sink = num_nodes - 1;
  struct Arc {
    uint32_t to;
    int32_t cap;
    uint32_t rev;
  };
  std::vector<std::vector<Arc>> g(num_nodes);
  auto add_arc = [&](uint32_t a, uint32_t b, int32_t cap) {
    g[a].push_back({b, cap, static_cast<uint32_t>(g[b].size())});
    g[b].push_back({a, 0, static_cast<uint32_t>(g[a].size() - 1)});
  };

  // Edge enumeration: (player i, config c) -> both endpoints.
  std::vector<std::pair<uint32_t, uint32_t>> edge_desc;
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t c = 0; c < (1u << (n - 1)); ++c) {
      uint32_t low = c & ((1u << i) - 1);
      uint32_t high = (c >> i) << (i + 1);
      uint32_t v0 = low | high;           // player i's hat = 0
      uint32_t v1 = v0 | (1u << i);       // player i's hat = 1
      uint32_t id = static_cast<uint32_t>(edge_desc.size());
      edge_desc.push_back({i, c});
      add_arc(source, 1 + id, 1);
      add_arc(1 + id, 1 + edges + v0, 1);
      add_arc(1 + id, 1 + edges + v1, 1);
    }
  }
  for (uint32_t v = 0; v < vertices; ++v)
    add_arc(1 + edges + v, sink, static_cast<int32_t>(target));

  // BFS augmenting paths (tiny graph; capacity is bounded by edges).
  int32_t flow = 0;
  while (true) {
    std::vector<int32_t> prev_node(num_nodes, -1), prev_arc(num_nodes, -1);
    std::vector<uint32_t> queue{source};
    prev_node[source] = static_cast<int32_t>(source);
    for (size_t qi = 0; qi < queue.size() && prev_node[sink] < 0; ++qi) {
      uint32_t u = queue[qi];
      for (size_t ai = 0; ai < g[u].size(); ++ai) {
        const Arc& arc = g[u][ai];
        if (arc.cap <= 0 || prev_node[arc.to] >= 0) continue;
        prev_node[arc.to] = static_cast<int32_t>(u);
        prev_arc[arc.to] = static_cast<int32_t>(ai);
        queue.push_back(arc.to);
      }
    }
    if (prev_node[sink] < 0) break;
    for (uint32_t v = sink; v != source; v = static_cast<uint32_t>(prev_node[v])) {
      Arc& arc = g[prev_node[v]][prev_arc[v]];
      arc.cap -= 1;
      g[v][arc.rev].cap += 1;
    }
    ++flow;
  }
  if (flow != static_cast<int32_t>(target * vertices)) return false;

  // Read the orientation off the saturated edge->vertex arcs; unrouted edges
  // (when target*vertices < edges) default to the 0-endpoint.
  out.n = n;
  out.tables.assign(n, 0);
  for (uint32_t id = 0; id < edges; ++id) {
    auto [i, c] = edge_desc[id];
    bool to_v1 = false;
    for (const Arc& arc : g[1 + id]) {
      if (arc.to == source || arc.cap != 0) continue;
      uint32_t v = arc.to - 1 - edges;
      to_v1 = ((v >> i) & 1) != 0;
      break;
    }
    if (to_v1) out.tables[i] |= 1u << c;
  }
  return true;
}

SearchResult search_guaranteed_by_orientation(uint32_t n) {
  SearchResult res;
  res.method = "orientation";
  res.strategies_enumerated = 0;
  uint32_t vertices = 1u << n;
  uint32_t edges = n * (vertices / 2);
  uint32_t upper = edges / vertices;  // average in-degree bounds the minimum
  for (uint32_t t = upper + 1; t-- > 0;) {
    FiniteStrategyTable w;
    if (orient_with_min_indegree(n, t, w)) {
      res.optimum = Rational::ratio(t, n);
      res.witness = w;
      return res;
    }
  }
  throw std::logic_error("orientation search: t=0 must be feasible");
}

}  // namespace

SearchResult search_strategy_space(uint32_t n, SearchObjective objective) {
  if (n < 2 || n > 4)
    throw std::invalid_argument("search_strategy_space: n must be in [2, 4]");
  if (n <= 3) return search_exhaustive(n, objective);
  return search_strategy_space_reduction(n, objective);
}

SearchResult search_strategy_space_reduction(uint32_t n, SearchObjective objective) {
  if (n < 2 || n > 4)
    throw std::invalid_argument("search_strategy_space_reduction: n must be in [2, 4]");
  return objective == SearchObjective::MaxAllCorrect
             ? search_all_correct_by_independent_set(n)
             : search_guaranteed_by_orientation(n);
}

nlohmann::json AdversarialSearchResult::to_json() const {
  return {{"wrong_count", wrong_count},
          {"witness", witness},
          {"average_wrong", rational_json(average_wrong)}};
}

AdversarialSearchResult adversarial_tail_black_search(const GuessRule& rule, uint32_t n,
                                                      const RandomSource& rng) {
  if (n < 1 || n > 24) throw std::invalid_argument("adversarial search: n must be in [1, 24]");
  if (!rule.space().is_finite_uniform() || rule.space().colors_for(1) != 2)
    throw std::invalid_argument("adversarial search: binary games only");
  uint64_t h = std::max<uint64_t>(rule.horizon(n), n);

  AdversarialSearchResult best;
  uint64_t total_wrong = 0;
  BitVec correct;
  for (uint64_t prefix = 0; prefix < (1ull << n); ++prefix) {
    BitVec bits(h);  // all-black beyond the prefix
    for (uint32_t i = 0; i < n; ++i) bits.set(i, (prefix >> (n - 1 - i)) & 1);
    HatAssignment hats = HatAssignment::binary(std::move(bits), Tail::ConstantBlack);
    rule.evaluate(hats, n, rng, correct, nullptr);
    uint64_t wrong = n - correct.count_prefix(n);
    total_wrong += wrong;
    if (wrong > best.wrong_count || best.witness.empty()) {
      best.wrong_count = wrong;
      best.witness.assign(n, 0);
      for (uint32_t i = 0; i < n; ++i) best.witness[i] = (prefix >> (n - 1 - i)) & 1;
    }
  }
  best.average_wrong = Rational::ratio(total_wrong, 1ull << n);
  return best;
}

}  // namespace hats

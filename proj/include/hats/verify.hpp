// Acceptance verification suites.  Each criterion runs a pinned configuration
// (sizes, run counts, tolerances fixed here, not calibrated later) and yields
// one pass/fail result with deterministic detail lines; the "all" suite is
// byte-reproducible for a fixed seed.
//
// Suites:
//   finite    exact finite-game laws, optimal-strategy search, conditional
//             independence, adversarial all-black-tail search
//   infinite  finite-horizon density window proxy, growing-block strategy
//   appendix  team plans (validation, sure inequalities, event statistics)
//             and mixed-strategy dispatch
//   colors    mod-K games, countable color ranges, continuum game

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hats {

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& line);
  void note(const std::string& line) { lines.push_back("  " + line); }
};

std::vector<CriterionResult> run_suite(const std::string& suite, uint64_t seed,
                                       unsigned jobs = 1);

// Stable text rendering: one PASS/FAIL line per criterion plus detail lines.
std::string render_results(const std::vector<CriterionResult>& results);
bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace hats

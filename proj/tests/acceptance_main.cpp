// Acceptance runner: executes every verification suite at a pinned seed,
// prints one PASS/FAIL line per criterion, and re-runs the whole thing to
// confirm the report is byte-identical (reproducibility criterion).

#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>

#include "hats/verify.hpp"

int main(int argc, char** argv) {
  uint64_t seed = 42;
  unsigned jobs = 2;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      seed = std::strtoull(argv[i + 1], nullptr, 10);
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc)
      jobs = static_cast<unsigned>(std::strtoul(argv[i + 1], nullptr, 10));
  }

  std::vector<hats::CriterionResult> results = hats::run_suite("all", seed, jobs);
  std::string first = hats::render_results(results);
  std::cout << first;

  std::vector<hats::CriterionResult> again = hats::run_suite("all", seed, jobs);
  std::string second = hats::render_results(again);
  bool reproducible = first == second;
  std::cout << (reproducible ? "PASS" : "FAIL")
            << " criterion-10 reproducibility: two invocations at seed " << seed
            << (reproducible ? " render byte-identical reports" : " DIFFER") << "\n";

  bool ok = hats::all_pass(results) && reproducible;
  std::cout << (ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT") << "\n";
  return ok ? 0 : 1;
}

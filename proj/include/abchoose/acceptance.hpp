#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace abchoose {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool budget_hit = false;  // a best-effort search ran out of budget
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  uint64_t seed = 0xab5eedULL;
  int workers = 1;
  std::vector<int> only;     // criterion ids to run; empty = all
  std::ostream* out = nullptr;  // per-criterion lines go here when set
};

// Run the whole acceptance suite (or the selected criteria), printing one
// PASS/FAIL line per criterion. Randomized criteria derive their engines
// from the seed, so a run is reproducible from the printed seed.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace abchoose

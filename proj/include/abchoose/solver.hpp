#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "abchoose/instance.hpp"

namespace abchoose {

struct SolveStats {
  uint64_t nodes = 0;         // branching assignments tried
  uint64_t propagations = 0;  // forced assignments
  double seconds = 0.0;
};

enum class SolveStatus { Sat, Unsat, BudgetExceeded };

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<Multicoloring> witness;  // present exactly when Sat
  SolveStats stats;
};

struct SolveOptions {
  uint64_t node_budget = 0;   // 0 = unlimited
  double time_budget = 0.0;   // seconds; 0 = unlimited
  // Solve connected pieces of the yet-uncolored subgraph independently. This
  // is what makes the pasted counterexamples tractable: once the shared hub
  // vertices are assigned, the copies fall apart into independent pieces.
  bool split_components = true;
  // Component splits are only attempted this deep in the search tree; the
  // hubs sit at the top, so a small bound captures the payoff without paying
  // the scan on every node of a deep enumeration.
  int split_depth = 8;
  // Partial assignment the solution must extend. Sets must be b-subsets of
  // the pinned vertex's list (violations are input errors).
  std::map<int, std::vector<int>> pinned;
};

// Exact decision search: backtracking on vertices (fewest available colors
// first, ties by smallest id), values enumerated as lexicographic b-subsets,
// with unit propagation: an available set smaller than b fails, one of
// exactly b is forced. Deterministic. Complete and sound within budget.
SolveResult solve(const ChoosabilityInstance& instance,
                  const SolveOptions& options = {});

struct EnumerationResult {
  uint64_t witnesses = 0;
  bool complete = false;  // false when stopped early or out of budget
  SolveStats stats;
};

// Enumerate every b-fold L-coloring (component splitting disabled so each
// full coloring is visited exactly once). on_witness may return false to
// stop early.
EnumerationResult solve_all(
    const ChoosabilityInstance& instance,
    const std::function<bool(const Multicoloring&)>& on_witness,
    const SolveOptions& options = {});

// Independent naive oracle: plain enumeration of b-subset choices in vertex
// id order with no propagation and no ordering heuristics, only immediate
// conflict checks. Guarded: the product of C(|L(v)|, b) must be at most
// 10^9, else it throws.
SolveResult brute_force_oracle(const ChoosabilityInstance& instance);

struct GreedyResult {
  bool success = false;
  Multicoloring coloring;
  int failed_vertex = -1;  // first vertex with fewer than b available colors
};

// Color in reverse degeneracy order, always taking the lexicographically
// least b-subset of the colors not used on already-colored neighbors.
// Guaranteed to succeed when every list has at least (d+1)*b colors, d the
// degeneracy.
GreedyResult greedy_degenerate(const ChoosabilityInstance& instance);

}  // namespace abchoose

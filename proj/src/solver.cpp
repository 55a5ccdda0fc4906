#include "abchoose/solver.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <stdexcept>

namespace abchoose {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
  const Graph& g;
  const int b;
  const SolveOptions& opts;
  std::vector<ColorSet> avail;
  std::vector<ColorSet> value;
  std::vector<char> done;
  SolveStats stats;
  Clock::time_point deadline{};
  bool has_deadline = false;
  bool out_of_budget = false;

  // enumeration mode: emit every complete coloring instead of stopping
  const std::function<bool(const Multicoloring&)>* emit = nullptr;
  uint64_t witnesses = 0;

  struct Change {
    int v;
    ColorSet prev;
  };

  Searcher(const ChoosabilityInstance& inst, const SolveOptions& o)
      : g(inst.graph), b(inst.b), opts(o) {
    const int n = g.n();
    avail.resize(n);
    value.resize(n);
    done.assign(n, 0);
    for (int v = 0; v < n; ++v) avail[v] = ColorSet::of(inst.lists.lists[v]);
    if (o.time_budget > 0) {
      has_deadline = true;
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(o.time_budget));
    }
  }

  bool budget_ok() {
    if (out_of_budget) return false;
    if (opts.node_budget && stats.nodes > opts.node_budget) {
      out_of_budget = true;
      return false;
    }
    if (has_deadline && (stats.nodes & 1023) == 0 && Clock::now() > deadline) {
      out_of_budget = true;
      return false;
    }
    return true;
  }

  // Assign value s to v and run unit propagation (available set smaller than
  // b fails, exactly b forces). All modifications are recorded for undo.
  // Returns false on conflict.
  bool assign(int v0, const ColorSet& s0, std::vector<Change>& avail_trail,
              std::vector<int>& done_trail) {
    std::vector<std::pair<int, ColorSet>> queue{{v0, s0}};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      auto [v, s] = queue[qi];
      if (done[v]) {
        if (!(value[v] == s)) return false;
        continue;
      }
      done[v] = 1;
      value[v] = s;
      done_trail.push_back(v);
      for (int u : g.neighbors(v)) {
        if (done[u]) {
          if (value[u].intersects(s)) return false;
          continue;
        }
        ColorSet next = avail[u] - s;
        if (next == avail[u]) continue;
        avail_trail.push_back({u, avail[u]});
        avail[u] = next;
        const int c = next.count();
        if (c < b) return false;
        if (c == b) {
          ++stats.propagations;
          queue.emplace_back(u, next);
        }
      }
    }
    return true;
  }

  void undo(const std::vector<Change>& avail_trail,
            const std::vector<int>& done_trail) {
    for (auto it = avail_trail.rbegin(); it != avail_trail.rend(); ++it)
      avail[it->v] = it->prev;
    for (int v : done_trail) done[v] = 0;
  }

  // Connected components of the not-yet-assigned part of `active`, each
  // sorted, ordered by smallest member.
  std::vector<std::vector<int>> split(const std::vector<int>& active) const {
    std::vector<int> undone;
    for (int v : active)
      if (!done[v]) undone.push_back(v);
    std::vector<char> in(g.n(), 0), seen(g.n(), 0);
    for (int v : undone) in[v] = 1;
    std::vector<std::vector<int>> comps;
    for (int s : undone) {
      if (seen[s]) continue;
      comps.emplace_back();
      std::vector<int> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comps.back().push_back(v);
        for (int u : g.neighbors(v))
          if (in[u] && !seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
      }
      std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
  }

  // Leaf handling. Decision mode: success. Enumeration mode: report the
  // coloring and keep searching (0), or abort when the callback said stop.
  int on_complete() {
    if (!emit) return 1;
    Multicoloring w;
    w.b = b;
    for (int v = 0; v < g.n(); ++v) w.phi[v] = value[v].to_vector();
    ++witnesses;
    if (!(*emit)(w)) return -1;
    return 0;
  }

  // Returns 1 = satisfiable (assignments left in place), 0 = exhausted,
  // -1 = aborted (budget, or enumeration callback stopped).
  int search(const std::vector<int>& active, int depth) {
    int best = -1, best_count = INT_MAX;
    for (int v : active) {
      if (done[v]) continue;
      const int c = avail[v].count();
      if (c < best_count) {
        best_count = c;
        best = v;
      }
    }
    if (best < 0) return on_complete();

    if (opts.split_components && !emit && depth <= opts.split_depth) {
      auto comps = split(active);
      if (comps.size() > 1) {
        for (const auto& comp : comps) {
          int r = search(comp, depth);
          if (r != 1) return r;
        }
        return 1;
      }
    }

    int outcome = 0;
    for_each_b_subset(avail[best], b, [&](const ColorSet& s) {
      ++stats.nodes;
      if (!budget_ok()) {
        outcome = -1;
        return false;
      }
      std::vector<Change> avail_trail;
      std::vector<int> done_trail;
      if (assign(best, s, avail_trail, done_trail)) {
        int r = search(active, depth + 1);
        if (r == 1) {
          outcome = 1;
          return false;  // keep assignments for witness extraction
        }
        undo(avail_trail, done_trail);
        if (r == -1) {
          outcome = -1;
          return false;
        }
      } else {
        undo(avail_trail, done_trail);
      }
      return true;
    });
    return outcome;
  }

  // Applies initial forcings (lists of size exactly b) and the caller's
  // pinned assignments. Returns false on an immediate conflict.
  bool initial_assign(const ChoosabilityInstance& inst) {
    std::vector<Change> avail_trail;
    std::vector<int> done_trail;
    for (const auto& [v, colors] : opts.pinned) {
      if (v < 0 || v >= g.n())
        throw std::invalid_argument("pinned vertex outside the graph");
      ColorSet s = ColorSet::of(colors);
      if (s.count() != b)
        throw std::invalid_argument("pinned set does not have size b");
      if (!ColorSet::of(inst.lists.lists[v]).contains(s))
        throw std::invalid_argument("pinned set is not a subset of the list");
      if (!assign(v, s, avail_trail, done_trail)) return false;
    }
    for (int v = 0; v < g.n(); ++v) {
      if (done[v]) continue;
      const int c = avail[v].count();
      if (c < b) return false;
      if (c == b && !assign(v, avail[v], avail_trail, done_trail)) return false;
    }
    return true;
  }

  Multicoloring extract() const {
    Multicoloring w;
    w.b = b;
    for (int v = 0; v < g.n(); ++v) w.phi[v] = value[v].to_vector();
    return w;
  }
};

std::vector<int> all_vertices(const Graph& g) {
  std::vector<int> v(g.n());
  for (int i = 0; i < g.n(); ++i) v[i] = i;
  return v;
}

}  // namespace

SolveResult solve(const ChoosabilityInstance& instance,
                  const SolveOptions& options) {
  instance.validate();
  const auto t0 = Clock::now();
  Searcher s(instance, options);
  int r = s.initial_assign(instance) ? s.search(all_vertices(instance.graph), 0)
                                     : 0;
  SolveResult res;
  res.stats = s.stats;
  res.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (r == 1) {
    res.status = SolveStatus::Sat;
    res.witness = s.extract();
  } else if (r == 0) {
    res.status = SolveStatus::Unsat;
  } else {
    res.status = SolveStatus::BudgetExceeded;
  }
  return res;
}

EnumerationResult solve_all(
    const ChoosabilityInstance& instance,
    const std::function<bool(const Multicoloring&)>& on_witness,
    const SolveOptions& options) {
  instance.validate();
  const auto t0 = Clock::now();
  Searcher s(instance, options);
  s.emit = &on_witness;
  int r = s.initial_assign(instance) ? s.search(all_vertices(instance.graph), 0)
                                     : 0;
  EnumerationResult res;
  res.witnesses = s.witnesses;
  res.complete = (r == 0) && !s.out_of_budget;
  res.stats = s.stats;
  res.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

namespace {

struct OracleSearcher {
  const ChoosabilityInstance& inst;
  std::vector<ColorSet> value;
  SolveStats stats;
  bool found = false;

  explicit OracleSearcher(const ChoosabilityInstance& i)
      : inst(i), value(i.graph.n()) {}

  bool rec(int v) {
    if (v == inst.graph.n()) return true;
    bool complete = for_each_b_subset(
        ColorSet::of(inst.lists.lists[v]), inst.b, [&](const ColorSet& s) {
          ++stats.nodes;
          for (int u : inst.graph.neighbors(v))
            if (u < v && value[u].intersects(s)) return true;  // next subset
          value[v] = s;
          if (rec(v + 1)) {
            found = true;
            return false;
          }
          return true;
        });
    (void)complete;
    return found;
  }
};

}  // namespace

SolveResult brute_force_oracle(const ChoosabilityInstance& instance) {
  instance.validate();
  long double states = 1;
  for (const auto& list : instance.lists.lists) {
    states *= static_cast<long double>(
        binom(list.size(), static_cast<uint64_t>(instance.b)));
    if (states > 1e9L)
      throw std::invalid_argument(
          "brute_force_oracle: state space exceeds the 1e9 guard");
  }
  const auto t0 = Clock::now();
  OracleSearcher s(instance);
  SolveResult res;
  if (s.rec(0)) {
    res.status = SolveStatus::Sat;
    Multicoloring w;
    w.b = instance.b;
    for (int v = 0; v < instance.graph.n(); ++v)
      w.phi[v] = s.value[v].to_vector();
    res.witness = std::move(w);
  } else {
    res.status = SolveStatus::Unsat;
  }
  res.stats = s.stats;
  res.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

GreedyResult greedy_degenerate(const ChoosabilityInstance& instance) {
  instance.validate();
  const Graph& g = instance.graph;
  auto deg = degeneracy_order(g);
  GreedyResult res;
  res.coloring.b = instance.b;
  std::vector<ColorSet> value(g.n());
  std::vector<char> colored(g.n(), 0);
  for (auto it = deg.order.rbegin(); it != deg.order.rend(); ++it) {
    const int v = *it;
    ColorSet avail = ColorSet::of(instance.lists.lists[v]);
    for (int u : g.neighbors(v))
      if (colored[u]) avail -= value[u];
    if (avail.count() < instance.b) {
      res.failed_vertex = v;
      return res;
    }
    auto colors = avail.to_vector();
    colors.resize(instance.b);  // lexicographically least b-subset
    value[v] = ColorSet::of(colors);
    colored[v] = 1;
    res.coloring.phi[v] = colors;
  }
  res.success = true;
  return res;
}

}  // namespace abchoose

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "abchoose/graph.hpp"
#include "abchoose/instance.hpp"
#include "abchoose/solver.hpp"
#include "doctest.h"

using namespace abchoose;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

ChoosabilityInstance uniform_instance(Graph g, std::vector<int> list, int b) {
  ChoosabilityInstance inst;
  inst.graph = std::move(g);
  inst.lists.lists.assign(inst.graph.n(), list);
  inst.b = b;
  return inst;
}

ChoosabilityInstance random_instance(std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % 7);
  const int b = 1 + static_cast<int>(rng() % 2);
  ChoosabilityInstance inst;
  inst.b = b;
  inst.graph = Graph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 2) inst.graph.add_edge(u, v);
  for (int v = 0; v < n; ++v) {
    int size = std::max(0, std::min(5, b - 1 + static_cast<int>(rng() % 4)));
    std::vector<int> pool{0, 1, 2, 3, 4, 5, 6, 7};
    for (int i = 0; i < size; ++i)
      std::swap(pool[i], pool[i + rng() % (pool.size() - i)]);
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    inst.lists.lists.push_back(pool);
  }
  return inst;
}

}  // namespace

TEST_CASE("complete graph needs more colors than its lists offer") {
  auto inst = uniform_instance(complete(4), {1, 2, 3}, 1);
  SolveResult res = solve(inst);
  CHECK(res.status == SolveStatus::Unsat);
  CHECK(!res.witness.has_value());
}

TEST_CASE("even cycle alternates two colors") {
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto inst = uniform_instance(c4, {1, 2}, 1);
  SolveResult res = solve(inst);
  REQUIRE(res.status == SolveStatus::Sat);
  CHECK(validate_coloring(inst, *res.witness));
}

TEST_CASE("edge with identical singleton lists is unsatisfiable") {
  auto inst = uniform_instance(Graph::from_edges(2, {{0, 1}}), {1}, 1);
  CHECK(solve(inst).status == SolveStatus::Unsat);
}

TEST_CASE("edgeless graphs are satisfiable whenever lists are long enough") {
  auto inst = uniform_instance(Graph(5), {1, 2, 3}, 2);
  SolveResult res = solve(inst);
  REQUIRE(res.status == SolveStatus::Sat);
  CHECK(validate_coloring(inst, *res.witness));
}

TEST_CASE("double-fold coloring keeps adjacent pairs disjoint") {
  // path on 3 vertices, lists of 4, b=2: middle must dodge both ends
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  auto inst = uniform_instance(p3, {1, 2, 3, 4}, 2);
  SolveResult res = solve(inst);
  REQUIRE(res.status == SolveStatus::Sat);
  CHECK(validate_coloring(inst, *res.witness));
}

TEST_CASE("solver agrees with the naive oracle on random instances") {
  std::mt19937_64 rng(2026);
  int sat = 0, unsat = 0;
  for (int round = 0; round < 200; ++round) {
    ChoosabilityInstance inst = random_instance(rng);
    SolveResult fast = solve(inst);
    SolveResult naive = brute_force_oracle(inst);
    REQUIRE(fast.status == naive.status);
    if (fast.status == SolveStatus::Sat) {
      ++sat;
      CHECK(validate_coloring(inst, *fast.witness));
      CHECK(validate_coloring(inst, *naive.witness));
    } else {
      ++unsat;
    }
  }
  // the distribution should exercise both outcomes
  CHECK(sat > 20);
  CHECK(unsat > 20);
}

TEST_CASE("solving twice yields the identical witness") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 30; ++round) {
    ChoosabilityInstance inst = random_instance(rng);
    SolveResult first = solve(inst);
    SolveResult second = solve(inst);
    REQUIRE(first.status == second.status);
    if (first.status == SolveStatus::Sat)
      CHECK(first.witness->phi == second.witness->phi);
  }
}

TEST_CASE("node budget cuts off the search honestly") {
  // 3x3 rook-ish tangle with tight lists forces real branching
  Graph g = complete(6);
  auto inst = uniform_instance(g, {1, 2, 3, 4, 5}, 1);
  SolveOptions opts;
  opts.node_budget = 1;
  SolveResult res = solve(inst, opts);
  CHECK(res.status == SolveStatus::BudgetExceeded);
  CHECK(!res.witness.has_value());
}

TEST_CASE("pinned vertices are honored") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  auto inst = uniform_instance(p3, {1, 2}, 1);
  SolveOptions opts;
  opts.pinned[0] = {1};
  opts.pinned[2] = {1};
  SolveResult res = solve(inst, opts);
  REQUIRE(res.status == SolveStatus::Sat);
  CHECK(res.witness->phi.at(0) == std::vector<int>{1});
  CHECK(res.witness->phi.at(2) == std::vector<int>{1});
  CHECK(res.witness->phi.at(1) == std::vector<int>{2});

  SUBCASE("contradictory pins are unsatisfiable") {
    SolveOptions bad;
    bad.pinned[0] = {1};
    bad.pinned[1] = {1};
    CHECK(solve(inst, bad).status == SolveStatus::Unsat);
  }
  SUBCASE("a pin outside the list is an input error") {
    SolveOptions bad;
    bad.pinned[0] = {9};
    CHECK_THROWS(solve(inst, bad));
  }
}

TEST_CASE("component splitting changes nothing observable") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    ChoosabilityInstance a = random_instance(rng);
    ChoosabilityInstance b = random_instance(rng);
    // disjoint union
    ChoosabilityInstance both;
    both.b = 1;
    a.b = b.b = 1;
    both.graph = Graph(a.graph.n() + b.graph.n());
    for (auto [u, v] : a.graph.edges()) both.graph.add_edge(u, v);
    for (auto [u, v] : b.graph.edges())
      both.graph.add_edge(a.graph.n() + u, a.graph.n() + v);
    both.lists.lists = a.lists.lists;
    both.lists.lists.insert(both.lists.lists.end(), b.lists.lists.begin(),
                            b.lists.lists.end());

    SolveOptions split, nosplit;
    nosplit.split_components = false;
    SolveResult rs = solve(both, split);
    SolveResult rn = solve(both, nosplit);
    CHECK(rs.status == rn.status);
    bool expect_sat = solve(a).status == SolveStatus::Sat &&
                      solve(b).status == SolveStatus::Sat;
    CHECK((rs.status == SolveStatus::Sat) == expect_sat);
  }
}

TEST_CASE("enumeration visits every coloring exactly once") {
  SUBCASE("triangle with three colors has six proper colorings") {
    auto inst = uniform_instance(complete(3), {1, 2, 3}, 1);
    uint64_t count = 0;
    EnumerationResult res = solve_all(inst, [&](const Multicoloring& phi) {
      CHECK(validate_coloring(inst, phi));
      ++count;
      return true;
    });
    CHECK(res.complete);
    CHECK(res.witnesses == 6);
    CHECK(count == 6);
  }
  SUBCASE("early stop reports an incomplete enumeration") {
    auto inst = uniform_instance(complete(3), {1, 2, 3}, 1);
    EnumerationResult res =
        solve_all(inst, [](const Multicoloring&) { return false; });
    CHECK(!res.complete);
    CHECK(res.witnesses == 1);
  }
  SUBCASE("matches the oracle count on random satisfiable instances") {
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 20) {
      ChoosabilityInstance inst = random_instance(rng);
      if (inst.graph.n() > 5) continue;
      // count by brute force over b-subset choices
      uint64_t expect = 0;
      std::function<void(int, std::vector<std::vector<int>>&)> go =
          [&](int v, std::vector<std::vector<int>>& acc) {
            if (v == inst.graph.n()) {
              ++expect;
              return;
            }
            const auto& list = inst.lists.lists[v];
            std::vector<int> idx(inst.b);
            if (static_cast<int>(list.size()) < inst.b) return;
            // enumerate b-subsets of list
            for (int i = 0; i < inst.b; ++i) idx[i] = i;
            while (true) {
              std::vector<int> set;
              for (int i : idx) set.push_back(list[i]);
              bool ok = true;
              for (int u : inst.graph.neighbors(v))
                if (u < v)
                  for (int c : set)
                    if (std::find(acc[u].begin(), acc[u].end(), c) !=
                        acc[u].end())
                      ok = false;
              if (ok) {
                acc[v] = set;
                go(v + 1, acc);
                acc[v].clear();
              }
              int i = inst.b - 1;
              int nn = static_cast<int>(list.size());
              while (i >= 0 && idx[i] == nn - inst.b + i) --i;
              if (i < 0) break;
              ++idx[i];
              for (int j = i + 1; j < inst.b; ++j) idx[j] = idx[j - 1] + 1;
            }
          };
      std::vector<std::vector<int>> acc(inst.graph.n());
      go(0, acc);
      EnumerationResult res =
          solve_all(inst, [](const Multicoloring&) { return true; });
      CHECK(res.complete);
      CHECK(res.witnesses == expect);
      ++checked;
    }
  }
}

TEST_CASE("oracle refuses instances beyond its guard") {
  auto inst = uniform_instance(complete(20), std::vector<int>{0, 1, 2, 3, 4,
                                                              5, 6, 7, 8, 9},
                               4);
  CHECK_THROWS(brute_force_oracle(inst));
}

TEST_CASE("greedy coloring in degeneracy order") {
  SUBCASE("trees succeed with lists of twice the fold size") {
    Graph tree = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
    for (int b : {1, 2, 3}) {
      std::vector<int> list;
      for (int c = 0; c < 2 * b; ++c) list.push_back(c);
      auto inst = uniform_instance(tree, list, b);
      GreedyResult res = greedy_degenerate(inst);
      REQUIRE(res.success);
      CHECK(validate_coloring(inst, res.coloring));
    }
  }
  SUBCASE("complete graph with short lists fails and names a vertex") {
    auto inst = uniform_instance(complete(4), {1, 2, 3}, 1);
    GreedyResult res = greedy_degenerate(inst);
    CHECK(!res.success);
    CHECK(res.failed_vertex >= 0);
  }
  SUBCASE("always succeeds with (d+1)b colors on random graphs") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 30; ++round) {
      ChoosabilityInstance inst = random_instance(rng);
      const int d = degeneracy_order(inst.graph).d;
      const int b = 1 + static_cast<int>(rng() % 2);
      inst.b = b;
      std::vector<int> list;
      for (int c = 0; c < (d + 1) * b; ++c) list.push_back(c);
      inst.lists.lists.assign(inst.graph.n(), list);
      GreedyResult res = greedy_degenerate(inst);
      REQUIRE(res.success);
      CHECK(validate_coloring(inst, res.coloring));
    }
  }
}

#include <algorithm>
#include <random>
#include <vector>

#include "abchoose/instance.hpp"
#include "abchoose/planar_color.hpp"
#include "abchoose/plane_graph.hpp"
#include "doctest.h"

using namespace abchoose;

namespace {

PlaneGraph triangle() {
  PlaneGraph pg;
  pg.graph = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  pg.rotation = {{1, 2}, {2, 0}, {0, 1}};
  pg.outer_face = {0, 2, 1};
  return pg;
}

std::vector<int> distinct_colors(std::mt19937_64& rng, int count,
                                 int universe) {
  std::vector<int> pool(universe);
  for (int i = 0; i < universe; ++i) pool[i] = i;
  for (int i = 0; i < count; ++i)
    std::swap(pool[i], pool[i + rng() % (universe - i)]);
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<int> first_m(const std::vector<int>& list, int m,
                         const std::vector<int>& avoid) {
  std::vector<int> out;
  for (int c : list) {
    if (std::find(avoid.begin(), avoid.end(), c) != avoid.end()) continue;
    out.push_back(c);
    if (static_cast<int>(out.size()) == m) break;
  }
  return out;
}

}  // namespace

TEST_CASE("triangle base case: the third vertex dodges both fixed colors") {
  PlaneGraph pg = triangle();
  ListAssignment lists;
  lists.lists = {{1}, {1, 2, 3}, {2}};
  PrecoloredEdge pre{0, 2, {1}, {2}};
  Multicoloring phi = tv_color(pg, lists, 1, pre);
  CHECK(phi.colors(0) == std::vector<int>{1});
  CHECK(phi.colors(2) == std::vector<int>{2});
  CHECK(phi.colors(1) == std::vector<int>{3});
}

TEST_CASE("smallest stacked graph: one interior vertex over the triangle") {
  PlaneGraph pg = generate_near_triangulation(4, 0);
  CHECK(pg.graph.n() == 4);
  CHECK(pg.graph.edge_count() == 6);
  ListAssignment lists;
  lists.lists = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2, 3, 4}};
  PrecoloredEdge pre{0, 2, {0}, {1}};
  Multicoloring phi = tv_color(pg, lists, 1, pre, true);
  ChoosabilityInstance inst{pg.graph, lists, 1};
  CHECK(validate_coloring(inst, phi));
  CHECK(phi.colors(0) == std::vector<int>{0});
  CHECK(phi.colors(2) == std::vector<int>{1});
}

TEST_CASE("either orientation of the precolored outer edge works") {
  PlaneGraph pg = generate_near_triangulation(6, 9);
  ListAssignment lists;
  std::mt19937_64 rng(1);
  for (int v = 0; v < 6; ++v) lists.lists.push_back(distinct_colors(rng, 5, 8));
  for (auto [u, v] : {std::pair{0, 2}, {2, 0}, {1, 2}, {0, 1}}) {
    PrecoloredEdge pre;
    pre.u = u;
    pre.v = v;
    pre.set_u = first_m(lists.lists[u], 1, {});
    pre.set_v = first_m(lists.lists[v], 1, pre.set_u);
    Multicoloring phi = tv_color(pg, lists, 1, pre, true);
    ChoosabilityInstance inst{pg.graph, lists, 1};
    CHECK(validate_coloring(inst, phi));
    CHECK(phi.colors(u) == pre.set_u);
    CHECK(phi.colors(v) == pre.set_v);
  }
}

TEST_CASE("random stacked graphs color and validate across fold sizes") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 60; ++round) {
    const int n = 4 + static_cast<int>(rng() % 40);
    const int m = 1 + round % 3;
    PlaneGraph pg = generate_near_triangulation(n, rng());
    ListAssignment lists;
    for (int v = 0; v < n; ++v)
      lists.lists.push_back(distinct_colors(rng, 5 * m, 8 * m));
    PrecoloredEdge pre;
    pre.u = 0;
    pre.v = 2;
    pre.set_u = first_m(lists.lists[0], m, {});
    pre.set_v = first_m(lists.lists[2], m, pre.set_u);
    Multicoloring phi = tv_color(pg, lists, m, pre, round % 10 == 0);
    ChoosabilityInstance inst{pg.graph, lists, m};
    CHECK(validate_coloring(inst, phi));
    CHECK(phi.colors(0) == pre.set_u);
    CHECK(phi.colors(2) == pre.set_v);
  }
}

TEST_CASE("outer vertices may carry only 3m colors") {
  // tight outer lists while the interior keeps 5m
  std::mt19937_64 rng(7);
  PlaneGraph pg = generate_near_triangulation(12, 77);
  const int m = 2;
  ListAssignment lists;
  for (int v = 0; v < 12; ++v)
    lists.lists.push_back(
        distinct_colors(rng, v < 3 ? 3 * m : 5 * m, 8 * m));
  PrecoloredEdge pre;
  pre.u = 0;
  pre.v = 2;
  pre.set_u = first_m(lists.lists[0], m, {});
  pre.set_v = first_m(lists.lists[2], m, pre.set_u);
  Multicoloring phi = tv_color(pg, lists, m, pre, true);
  ChoosabilityInstance inst{pg.graph, lists, m};
  CHECK(validate_coloring(inst, phi));
}

TEST_CASE("precondition violations are rejected") {
  PlaneGraph pg = generate_near_triangulation(8, 3);
  ListAssignment lists;
  for (int v = 0; v < 8; ++v) lists.lists.push_back({0, 1, 2, 3, 4});
  SUBCASE("precolored pair must be an outer edge") {
    // vertices 3.. are interior in the stacked construction
    PrecoloredEdge pre{3, 4, {0}, {1}};
    CHECK_THROWS_AS(tv_color(pg, lists, 1, pre), std::invalid_argument);
  }
  SUBCASE("precolored sets must be disjoint") {
    PrecoloredEdge pre{0, 2, {0}, {0}};
    CHECK_THROWS_AS(tv_color(pg, lists, 1, pre), std::invalid_argument);
  }
  SUBCASE("precolored sets must come from the lists") {
    PrecoloredEdge pre{0, 2, {9}, {1}};
    CHECK_THROWS_AS(tv_color(pg, lists, 1, pre), std::invalid_argument);
  }
  SUBCASE("an interior list below 5m is rejected") {
    ListAssignment short_lists = lists;
    short_lists.lists[5] = {0, 1, 2, 3};
    PrecoloredEdge pre{0, 2, {0}, {1}};
    CHECK_THROWS_AS(tv_color(pg, short_lists, 1, pre), std::invalid_argument);
  }
  SUBCASE("an outer list below 3m is rejected") {
    ListAssignment short_lists = lists;
    short_lists.lists[1] = {0, 1};
    PrecoloredEdge pre{0, 2, {0}, {1}};
    CHECK_THROWS_AS(tv_color(pg, short_lists, 1, pre), std::invalid_argument);
  }
}

TEST_CASE("stacked triangulation generator") {
  SUBCASE("n=3 is the bare triangle") {
    PlaneGraph pg = generate_near_triangulation(3, 123);
    CHECK(pg.graph.n() == 3);
    CHECK(pg.graph.edge_count() == 3);
    CHECK(pg.faces().size() == 2);
  }
  SUBCASE("edge and face counts are maximal-planar") {
    PlaneGraph pg = generate_near_triangulation(10, 7);
    pg.validate();
    CHECK(pg.graph.n() == 10);
    CHECK(pg.graph.edge_count() == 24);        // 3n - 6
    CHECK(pg.faces().size() == 16);            // 2n - 4
    CHECK(pg.is_near_triangulation());
    CHECK(same_cycle(pg.outer_face, {0, 1, 2}));
  }
  SUBCASE("deterministic per seed") {
    PlaneGraph a = generate_near_triangulation(30, 99);
    PlaneGraph b = generate_near_triangulation(30, 99);
    CHECK(a.graph == b.graph);
    CHECK(a.rotation == b.rotation);
    PlaneGraph c = generate_near_triangulation(30, 100);
    CHECK(!(a.graph == c.graph));  // overwhelmingly likely to differ
  }
  SUBCASE("every size validates") {
    for (int n = 3; n <= 40; ++n) {
      PlaneGraph pg = generate_near_triangulation(n, n * 31);
      pg.validate();
      CHECK(pg.is_near_triangulation());
    }
  }
}

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "abchoose/embedder.hpp"
#include "abchoose/graph.hpp"
#include "abchoose/instance.hpp"
#include "abchoose/plane_graph.hpp"
#include "doctest.h"

using namespace abchoose;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::uniform_real_distribution<>(0, 1)(rng) < p) g.add_edge(u, v);
  return g;
}

// reference degeneracy: max over subgraphs of the minimum degree, by brute
// force over all vertex subsets
int degeneracy_brute(const Graph& g) {
  int best = 0;
  const int n = g.n();
  for (int mask = 1; mask < (1 << n); ++mask) {
    int min_deg = n;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      int d = 0;
      for (int u : g.neighbors(v))
        if (mask >> u & 1) ++d;
      min_deg = std::min(min_deg, d);
    }
    best = std::max(best, min_deg);
  }
  return best;
}

}  // namespace

TEST_CASE("graph basics: sorted adjacency, idempotent edges, errors") {
  Graph g(3);
  g.add_edge(2, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // duplicate collapses
  CHECK(g.edge_count() == 2);
  CHECK(g.neighbors(0) == std::vector<int>{1, 2});
  CHECK(g.has_edge(0, 2));
  CHECK(!g.has_edge(1, 2));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK_THROWS(g.add_edge(1, 1));
  CHECK_THROWS(g.add_edge(0, 3));

  Graph h = g;
  h.set_label(0, "root");
  CHECK(g == h);  // labels are metadata only
}

TEST_CASE("pasting two triangles along an edge gives the diamond") {
  Graph t1 = complete(3);
  Graph t2 = complete(3);
  PasteResult r = paste(t1, t2, {{0, 0}, {1, 1}});
  CHECK(r.graph.n() == 4);
  CHECK(r.graph.edge_count() == 5);  // shared edge kept once
  CHECK(r.map2[0] == 0);
  CHECK(r.map2[1] == 1);
  CHECK(r.map2[2] == 3);
  CHECK(r.graph.has_edge(0, 3));
  CHECK(r.graph.has_edge(1, 3));
  CHECK(!r.graph.has_edge(2, 3));
}

TEST_CASE("pasting is associative on vertex-disjoint attachments") {
  // chain three triangles: A-B share edge, then C shares an edge of B's image
  Graph tri = complete(3);
  PasteResult ab = paste(tri, tri, {{0, 1}, {1, 2}});
  PasteResult abc1 = paste(ab.graph, tri, {{0, ab.map2[1]}, {1, ab.map2[2]}});

  PasteResult bc = paste(tri, tri, {{0, 2}, {1, 0}});
  // now glue the combined piece onto A by the same identifications
  PasteResult abc2 = paste(tri, bc.graph, {{1, 1}, {2, 2}});
  CHECK(abc1.graph.n() == abc2.graph.n());
  CHECK(abc1.graph.edge_count() == abc2.graph.edge_count());
}

TEST_CASE("paste rejects identifications that would create a self-loop") {
  Graph e = Graph::from_edges(2, {{0, 1}});
  CHECK_THROWS(paste(complete(3), e, {{0, 0}, {1, 0}}));
}

TEST_CASE("degeneracy order") {
  SUBCASE("forest") {
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {4, 5}});
    CHECK(degeneracy_order(g).d <= 1);
  }
  SUBCASE("complete graph") { CHECK(degeneracy_order(complete(4)).d == 3); }
  SUBCASE("matches brute force on random graphs") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 40; ++round) {
      Graph g = random_graph(rng, 3 + rng() % 6, 0.4);
      CHECK(degeneracy_order(g).d == degeneracy_brute(g));
    }
  }
  SUBCASE("order is a valid elimination order") {
    std::mt19937_64 rng(3);
    Graph g = random_graph(rng, 8, 0.5);
    DegeneracyResult r = degeneracy_order(g);
    std::set<int> removed;
    for (int v : r.order) {
      int later = 0;
      for (int u : g.neighbors(v))
        if (!removed.count(u)) ++later;
      CHECK(later <= r.d);
      removed.insert(v);
    }
  }
}

TEST_CASE("connectivity helpers") {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(!is_connected(g));
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1, 2});
  CHECK(comps[1] == std::vector<int>{3, 4});

  CHECK(is_bipartite(g));
  CHECK(!is_bipartite(complete(3)));
  CHECK(is_bipartite(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));

  CHECK(is_two_connected(complete(3)));
  CHECK(!is_two_connected(Graph::from_edges(3, {{0, 1}, {1, 2}})));
  CHECK(is_two_connected(Graph::from_edges(2, {{0, 1}})));
}

TEST_CASE("induced subgraphs compact ids and report the old ones") {
  Graph g = complete(4);
  std::vector<int> old_of_new;
  Graph h = induced_subgraph(g, {3, 1}, &old_of_new);
  CHECK(h.n() == 2);
  CHECK(h.edge_count() == 1);
  CHECK(old_of_new == std::vector<int>{1, 3});
}

TEST_CASE("clique containment and small isomorphism") {
  Graph octa(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v - u != 3) octa.add_edge(u, v);
  CHECK(contains_clique(octa, 3));
  CHECK(!contains_clique(octa, 4));
  CHECK(contains_clique(complete(5), 5));
  CHECK(isomorphic(octa, octa));
  CHECK(!isomorphic(octa, complete(6)));
}

TEST_CASE("faces of small embeddings satisfy Euler's formula") {
  SUBCASE("triangle: two faces of length three") {
    PlaneGraph pg;
    pg.graph = complete(3);
    pg.rotation = {{1, 2}, {2, 0}, {0, 1}};
    pg.outer_face = {0, 2, 1};
    pg.validate();
    auto fs = pg.faces();
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].size() == 3);
    CHECK(fs[1].size() == 3);
  }
  SUBCASE("K4: four triangular faces") {
    auto pg = embed_planar(complete(4));
    REQUIRE(pg.has_value());
    pg->validate();
    auto fs = pg->faces();
    REQUIRE(fs.size() == 4);
    for (const auto& f : fs) CHECK(f.size() == 3);
    CHECK(pg->is_near_triangulation());
  }
  SUBCASE("octahedron: eight triangular faces") {
    Graph octa(6);
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v)
        if (v - u != 3) octa.add_edge(u, v);
    auto pg = embed_planar(octa);
    REQUIRE(pg.has_value());
    pg->validate();
    auto fs = pg->faces();
    REQUIRE(fs.size() == 8);  // 6 - 12 + 8 = 2
    for (const auto& f : fs) CHECK(f.size() == 3);
  }
  SUBCASE("K5 has no embedding") { CHECK(!embed_planar(complete(5))); }
  SUBCASE("K33 has no embedding") {
    Graph k33(6);
    for (int u = 0; u < 3; ++u)
      for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
    CHECK(!embed_planar(k33));
  }
}

TEST_CASE("plane graph validation catches malformed rotations") {
  PlaneGraph pg;
  pg.graph = complete(3);
  pg.rotation = {{1, 2}, {2, 0}, {0, 0}};  // 0 repeated, 1 missing
  pg.outer_face = {0, 2, 1};
  CHECK_THROWS(pg.validate());
}

TEST_CASE("same_cycle compares up to rotation and reversal") {
  CHECK(same_cycle({0, 1, 2, 3}, {2, 3, 0, 1}));
  CHECK(same_cycle({0, 1, 2, 3}, {0, 3, 2, 1}));
  CHECK(!same_cycle({0, 1, 2, 3}, {0, 2, 1, 3}));
  CHECK(!same_cycle({0, 1, 2}, {0, 1, 2, 3}));
}

TEST_CASE("coloring validation") {
  ChoosabilityInstance inst;
  inst.graph = Graph::from_edges(2, {{0, 1}});
  inst.b = 1;

  SUBCASE("disjoint lists force validity") {
    inst.lists.lists = {{1, 2}, {3, 4}};
    Multicoloring phi;
    phi.b = 1;
    phi.phi = {{0, {1}}, {1, {3}}};
    CHECK(validate_coloring(inst, phi));
  }
  SUBCASE("shared color on an edge") {
    inst.lists.lists = {{1, 2}, {1, 2}};
    Multicoloring phi;
    phi.b = 1;
    phi.phi = {{0, {1}}, {1, {1}}};
    CHECK(!validate_coloring(inst, phi));
  }
  SUBCASE("color outside the list") {
    inst.lists.lists = {{1, 2}, {3, 4}};
    Multicoloring phi;
    phi.b = 1;
    phi.phi = {{0, {5}}, {1, {3}}};
    CHECK(!validate_coloring(inst, phi));
  }
  SUBCASE("incomplete coloring is an input error") {
    inst.lists.lists = {{1, 2}, {3, 4}};
    Multicoloring phi;
    phi.b = 1;
    phi.phi = {{0, {1}}};
    CHECK_THROWS(validate_coloring(inst, phi));
  }
  SUBCASE("unknown vertex is an input error") {
    inst.lists.lists = {{1, 2}, {3, 4}};
    Multicoloring phi;
    phi.b = 1;
    phi.phi = {{0, {1}}, {1, {3}}, {7, {1}}};
    CHECK_THROWS(validate_coloring(inst, phi));
  }
}

TEST_CASE("list assignment validation") {
  ListAssignment lists;
  lists.lists = {{0, 1}, {2, 3}};
  lists.validate(2);
  CHECK_THROWS(lists.validate(3));  // missing a vertex
  lists.declared_size = 3;
  CHECK_THROWS(lists.validate(2));  // sizes don't match the declaration
  lists.declared_size.reset();
  lists.lists[0] = {1, 0};
  CHECK_THROWS(lists.validate(2));  // not ascending
}

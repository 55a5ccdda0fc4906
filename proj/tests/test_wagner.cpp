#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "abchoose/embedder.hpp"
#include "abchoose/graph.hpp"
#include "abchoose/instance.hpp"
#include "abchoose/planar_color.hpp"
#include "abchoose/solver.hpp"
#include "abchoose/wagner.hpp"
#include "doctest.h"

using namespace abchoose;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph two_triangles() {
  // triangles 0-1-2 and 0-1-3 sharing the edge {0,1}
  return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

Graph bipyramid(int k) {
  Graph g(k + 2);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(i, k);
    g.add_edge(i, k + 1);
  }
  return g;
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

ListAssignment uniform_lists(int n, int size) {
  ListAssignment lists;
  std::vector<int> list;
  for (int c = 0; c < size; ++c) list.push_back(c);
  lists.lists.assign(n, list);
  return lists;
}

}  // namespace

TEST_CASE("the exceptional 3-regular piece") {
  Graph g = m8();
  CHECK(g.n() == 8);
  CHECK(g.edge_count() == 12);
  for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
  CHECK(!contains_clique(g, 3));  // girth 4
  CHECK(is_connected(g));
  CHECK(is_two_connected(g));
  CHECK(!embed_planar(g).has_value());  // nonplanar
  CHECK(isomorphic(g, g));
}

TEST_CASE("separating clique search") {
  SUBCASE("two triangles sharing an edge split at it") {
    auto sc = find_separating_clique(two_triangles());
    REQUIRE(sc.has_value());
    CHECK(sc->clique == std::vector<int>{0, 1});
    CHECK(sc->g1_vertices == std::vector<int>{0, 1, 2});
    CHECK(sc->g2_vertices == std::vector<int>{0, 1, 3});
    CHECK(sc->g1.n() == 3);
    CHECK(sc->g2.n() == 3);
  }
  SUBCASE("complete graphs have none") {
    CHECK(!find_separating_clique(complete(4)).has_value());
    CHECK(!find_separating_clique(complete(3)).has_value());
  }
  SUBCASE("the 3-regular piece has none") {
    CHECK(!find_separating_clique(m8()).has_value());
  }
  SUBCASE("4-connected triangulations have none") {
    CHECK(!find_separating_clique(bipyramid(4)).has_value());
    CHECK(!find_separating_clique(bipyramid(6)).has_value());
  }
  SUBCASE("a stacked triangulation splits at a separating triangle") {
    PlaneGraph pg = generate_near_triangulation(6, 5);
    auto sc = find_separating_clique(pg.graph);
    REQUIRE(sc.has_value());
    CHECK(sc->clique.size() == 3);
  }
  SUBCASE("recombining the split reproduces the graph") {
    for (const Graph& g :
         {two_triangles(), generate_near_triangulation(9, 41).graph}) {
      auto sc = find_separating_clique(g);
      REQUIRE(sc.has_value());
      // union of the two sides' edges, mapped back to original ids
      std::set<std::pair<int, int>> edges;
      for (auto [u, v] : sc->g1.edges()) {
        int a = sc->g1_vertices[u], b = sc->g1_vertices[v];
        edges.insert({std::min(a, b), std::max(a, b)});
      }
      for (auto [u, v] : sc->g2.edges()) {
        int a = sc->g2_vertices[u], b = sc->g2_vertices[v];
        edges.insert({std::min(a, b), std::max(a, b)});
      }
      auto original = g.edges();
      CHECK(edges == std::set<std::pair<int, int>>(original.begin(),
                                                   original.end()));
      // the two sides overlap exactly in the clique
      std::set<int> s1(sc->g1_vertices.begin(), sc->g1_vertices.end());
      std::set<int> s2(sc->g2_vertices.begin(), sc->g2_vertices.end());
      std::vector<int> inter;
      std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                            std::back_inserter(inter));
      CHECK(inter == sc->clique);
      CHECK(s1.size() + s2.size() == g.n() + sc->clique.size());
    }
  }
}

TEST_CASE("construction trees evaluate by pasting") {
  SUBCASE("a single leaf is returned as-is") {
    ConstructionTree tree;
    tree.root = std::make_unique<ConstructionTree::Node>();
    tree.root->leaf = two_triangles();
    CHECK(build_from_tree(tree) == two_triangles());
  }
  SUBCASE("two K4 leaves pasted on a triangle") {
    ConstructionTree tree;
    tree.root = std::make_unique<ConstructionTree::Node>();
    tree.root->left = std::make_unique<ConstructionTree::Node>();
    tree.root->left->leaf = complete(4);
    tree.root->right = std::make_unique<ConstructionTree::Node>();
    tree.root->right->leaf = complete(4);
    tree.root->identify = {{0, 0}, {1, 1}, {2, 2}};
    Graph g = build_from_tree(tree);
    CHECK(g.n() == 5);
    CHECK(g.edge_count() == 9);
  }
  SUBCASE("vertex count follows inclusion-exclusion over the pastes") {
    // left-deep chain of five K4 leaves glued at edges
    ConstructionTree tree;
    tree.root = std::make_unique<ConstructionTree::Node>();
    tree.root->leaf = complete(4);
    int total = 4;
    for (int i = 1; i < 5; ++i) {
      auto parent = std::make_unique<ConstructionTree::Node>();
      parent->left = std::move(tree.root);
      parent->right = std::make_unique<ConstructionTree::Node>();
      parent->right->leaf = complete(4);
      parent->identify = {{0, 0}, {1, 1}};
      tree.root = std::move(parent);
      total += 4 - 2;
    }
    CHECK(build_from_tree(tree).n() == total);
  }
  SUBCASE("a paste site that is not a clique is rejected") {
    ConstructionTree tree;
    tree.root = std::make_unique<ConstructionTree::Node>();
    tree.root->left = std::make_unique<ConstructionTree::Node>();
    tree.root->left->leaf = Graph::from_edges(3, {{0, 1}, {1, 2}});  // path
    tree.root->right = std::make_unique<ConstructionTree::Node>();
    tree.root->right->leaf = complete(3);
    tree.root->identify = {{0, 0}, {1, 2}};  // {0,2} not an edge in the path
    CHECK_THROWS_AS(build_from_tree(tree), std::invalid_argument);
  }
}

TEST_CASE("coloring extension through the decomposition") {
  SUBCASE("K4 from an edge precoloring") {
    Graph g = complete(4);
    ListAssignment lists = uniform_lists(4, 5);
    std::map<int, std::vector<int>> phiH = {{0, {1}}, {1, {2}}};
    Multicoloring phi = extend_coloring(g, lists, 1, {0, 1}, phiH);
    ChoosabilityInstance inst{g, lists, 1};
    CHECK(validate_coloring(inst, phi));
    CHECK(phi.colors(0) == std::vector<int>{1});
    CHECK(phi.colors(1) == std::vector<int>{2});
  }
  SUBCASE("the 3-regular piece at fold two") {
    Graph g = m8();
    ListAssignment lists = uniform_lists(8, 10);
    Multicoloring phi = extend_coloring(g, lists, 2, {}, {});
    ChoosabilityInstance inst{g, lists, 2};
    CHECK(validate_coloring(inst, phi));
  }
  SUBCASE("a 4-connected triangulation goes through the plane colorer") {
    Graph g = bipyramid(5);
    std::mt19937_64 rng(31);
    ListAssignment lists;
    for (int v = 0; v < g.n(); ++v)
      lists.lists.push_back(distinct_colors(rng, 5, 8));
    std::map<int, std::vector<int>> phiH = {{0, {lists.lists[0][0]}}};
    Multicoloring phi = extend_coloring(g, lists, 1, {0}, phiH);
    ChoosabilityInstance inst{g, lists, 1};
    CHECK(validate_coloring(inst, phi));
    CHECK(phi.colors(0) == phiH[0]);
  }
  SUBCASE("a triangle hub on two pasted K4s") {
    Graph g = build_from_tree([] {
      ConstructionTree tree;
      tree.root = std::make_unique<ConstructionTree::Node>();
      tree.root->left = std::make_unique<ConstructionTree::Node>();
      tree.root->left->leaf = complete(4);
      tree.root->right = std::make_unique<ConstructionTree::Node>();
      tree.root->right->leaf = complete(4);
      tree.root->identify = {{0, 1}, {1, 2}, {2, 3}};
      return tree;
    }());
    ListAssignment lists = uniform_lists(5, 5);
    std::map<int, std::vector<int>> phiH = {
        {1, {0}}, {2, {1}}, {3, {2}}};
    Multicoloring phi = extend_coloring(g, lists, 1, {1, 2, 3}, phiH);
    ChoosabilityInstance inst{g, lists, 1};
    CHECK(validate_coloring(inst, phi));
    for (int h : {1, 2, 3}) CHECK(phi.colors(h) == phiH[h]);
  }
  SUBCASE("mixed paste of a triangulation and the 3-regular piece") {
    // glue m8 onto a stacked triangulation along an edge
    Graph tri = generate_near_triangulation(7, 55).graph;
    PasteResult pasted = paste(tri, m8(), {{0, 0}, {1, 1}});
    Graph g = pasted.graph;
    std::mt19937_64 rng(8);
    ListAssignment lists;
    for (int v = 0; v < g.n(); ++v)
      lists.lists.push_back(distinct_colors(rng, 10, 16));
    std::map<int, std::vector<int>> phiH = {
        {0, {lists.lists[0][0], lists.lists[0][1]}}};
    Multicoloring phi = extend_coloring(g, lists, 2, {0}, phiH);
    ChoosabilityInstance inst{g, lists, 2};
    CHECK(validate_coloring(inst, phi));
  }
  SUBCASE("small cases corroborated by the exact solver") {
    std::mt19937_64 rng(99);
    for (int n : {4, 5, 6, 7}) {
      Graph g = generate_near_triangulation(n, rng()).graph;
      ListAssignment lists;
      for (int v = 0; v < n; ++v)
        lists.lists.push_back(distinct_colors(rng, 5, 7));
      Multicoloring phi = extend_coloring(g, lists, 1, {}, {});
      ChoosabilityInstance inst{g, lists, 1};
      CHECK(validate_coloring(inst, phi));
      CHECK(solve(inst).status == SolveStatus::Sat);
    }
  }
  SUBCASE("lists shorter than 5m are rejected") {
    Graph g = complete(4);
    ListAssignment lists = uniform_lists(4, 4);
    CHECK_THROWS_AS(extend_coloring(g, lists, 1, {}, {}),
                    std::invalid_argument);
  }
  SUBCASE("graphs that do not decompose are rejected") {
    // C5 has no separating clique and is no triangulation
    Graph c5 =
        Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK_THROWS_AS(extend_coloring(c5, uniform_lists(5, 5), 1, {}, {}),
                    std::invalid_argument);
    // K5 is excluded structurally as well
    CHECK_THROWS_AS(extend_coloring(complete(5), uniform_lists(5, 5), 1, {}, {}),
                    std::invalid_argument);
  }
  SUBCASE("a precolored set outside its list is rejected") {
    Graph g = complete(4);
    ListAssignment lists = uniform_lists(4, 5);
    std::map<int, std::vector<int>> phiH = {{0, {9}}};
    CHECK_THROWS_AS(extend_coloring(g, lists, 1, {0}, phiH),
                    std::invalid_argument);
  }
  SUBCASE("a non-clique precolored set is rejected") {
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    std::map<int, std::vector<int>> phiH = {{0, {0}}, {2, {1}}};
    CHECK_THROWS_AS(extend_coloring(c4, uniform_lists(4, 5), 1, {0, 2}, phiH),
                    std::invalid_argument);
  }
}

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "abchoose/graph.hpp"
#include "abchoose/instance.hpp"

namespace abchoose {

// The 8-vertex cycle with its four diagonals (a Moebius ladder): the one
// 3-regular exceptional piece of the decomposition.
Graph m8();

struct SeparatingClique {
  std::vector<int> clique;       // original vertex ids, sorted
  Graph g1;                      // side holding the smallest outside vertex
  Graph g2;                      // everything else, clique included in both
  std::vector<int> g1_vertices;  // original id of each compacted g1 vertex
  std::vector<int> g2_vertices;
};

// Smallest separating clique, preferring fewer vertices and then the
// lexicographically least vertex set. Only K2 and K3 cuts are considered.
std::optional<SeparatingClique> find_separating_clique(const Graph& g);

// Binary pasting plan: a leaf holds a graph, an inner node pastes the right
// child onto the left one by identifying the right-hand vertices in the map
// with left-hand ones. Identified sites must be cliques of 2 or 3 vertices
// on both sides.
struct ConstructionTree {
  struct Node {
    std::optional<Graph> leaf;
    std::unique_ptr<Node> left, right;
    std::map<int, int> identify;  // right-eval vertex -> left-eval vertex
  };
  std::unique_ptr<Node> root;
};

Graph build_from_tree(const ConstructionTree& tree);

// Extend a coloring of a clique H (up to 3 vertices, empty allowed) to an
// m-fold list coloring of the whole graph from lists of size >= 5m. The
// graph must decompose through separating cliques into plane triangulations
// and copies of the 3-regular exceptional piece; anything else throws
// std::invalid_argument.
Multicoloring extend_coloring(const Graph& g, const ListAssignment& lists,
                              int m, const std::vector<int>& H,
                              const std::map<int, std::vector<int>>& phiH);

}  // namespace abchoose

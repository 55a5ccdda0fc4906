#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abchoose {

// Finite simple undirected graph on vertex ids 0..n-1. Neighbor lists are
// kept sorted ascending, which is the canonical form used for equality.
// Optional per-vertex string labels carry figure names ("1", "8'", ...);
// labels are metadata and do not take part in equality.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n), labels_(n) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  int add_vertex() {
    adj_.emplace_back();
    labels_.emplace_back();
    return n() - 1;
  }

  // Inserts the edge keeping neighbor lists sorted; a duplicate insert is a
  // no-op, a self-loop or an out-of-range endpoint is an error.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  const std::string& label(int v) const {
    check_vertex(v);
    return labels_[v];
  }
  void set_label(int v, std::string s) {
    check_vertex(v);
    labels_[v] = std::move(s);
  }

  // Equality compares the adjacency structure only (labels are metadata).
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  int m_ = 0;
};

// Result of pasting g2 onto g1. Vertices of g1 keep their ids; unidentified
// vertices of g2 are appended in ascending order of their g2 id. map2[v2]
// gives the id of g2's vertex v2 in the pasted graph.
struct PasteResult {
  Graph graph;
  std::vector<int> map2;
};

// Glue g2 onto g1, identifying g2-vertex k with g1-vertex identify[k].
// Duplicate edges collapse; an identification that would create a self-loop
// (two adjacent g2 vertices mapped to one g1 vertex) is an error. Labels of
// identified vertices keep g1's label unless it is empty.
PasteResult paste(const Graph& g1, const Graph& g2,
                  const std::map<int, int>& identify);

struct DegeneracyResult {
  int d = 0;                // max degree seen at removal time
  std::vector<int> order;   // removal order
};

// Repeatedly remove a minimum-degree vertex (ties: smallest id).
DegeneracyResult degeneracy_order(const Graph& g);

bool is_connected(const Graph& g);
// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_bipartite(const Graph& g);
// Brute-force articulation check; a graph on < 3 vertices counts as
// 2-connected only if it is a connected K_1 or K_2 (convention used by the
// near-triangulation checks, where the outer cycle needs >= 3 vertices).
bool is_two_connected(const Graph& g);

// Induced subgraph on the given (sorted or unsorted) vertex set; ids are
// compacted. When old_of_new is non-null it receives new-id -> old-id.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* old_of_new = nullptr);

// Does g contain a clique on k vertices (as a subgraph)? Desk scale.
bool contains_clique(const Graph& g, int k);

// Brute-force isomorphism test, restricted to graphs with at most 10
// vertices (its only job here is recognizing small fixed graphs like the
// Wagner graph).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace abchoose

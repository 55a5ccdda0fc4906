#include "abchoose/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace abchoose {

namespace {

std::vector<int> iota_range(int lo, int hi) {
  std::vector<int> v;
  for (int c = lo; c < hi; ++c) v.push_back(c);
  return v;
}

std::vector<int> sorted_union(std::initializer_list<const std::vector<int>*> parts) {
  std::vector<int> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

}  // namespace

std::vector<std::vector<std::vector<int>>> enumerate_disjoint_tuples(int a,
                                                                     int b,
                                                                     int k) {
  if (k != 2 && k != 3)
    throw std::invalid_argument("tuple arity must be 2 or 3");
  if (b < 1 || a < k * b)
    throw std::invalid_argument("need a >= k*b to pick disjoint b-subsets");
  std::vector<std::vector<std::vector<int>>> out;
  ColorSet universe = ColorSet::range(0, a);
  std::vector<std::vector<int>> tuple(k);
  // lexicographic nesting: later components enumerate subsets of what the
  // earlier ones left over
  std::function<void(int, ColorSet)> rec = [&](int level, ColorSet remaining) {
    if (level == k) {
      out.push_back(tuple);
      return;
    }
    for_each_b_subset(remaining, b, [&](const ColorSet& s) {
      tuple[level] = s.to_vector();
      rec(level + 1, remaining - s);
      return true;
    });
  };
  rec(0, universe);
  return out;
}

Palette default_p4_palette(int a, int b) {
  require(b >= 1, "need b >= 1");
  require(2 * b <= a && a < 3 * b, "the path palette needs 2 <= a/b < 3");
  return Palette::consecutive(a, b, {"X", "Y", "P", "T"}, a - 2 * b);
}

Palette default_f_palette(int a, int b) {
  require(b >= 1, "need b >= 1");
  require(4 * b <= a && 5 * a < 22 * b,
          "the planar-piece palette needs 4 <= a/b < 22/5");
  return Palette::consecutive(a, b, {"X", "Y", "P", "Q", "R", "T"}, a - 4 * b);
}

Palette default_octa_palette(int a, int b) {
  require(b >= 1, "need b >= 1");
  require(4 * b <= a && a < 5 * b,
          "the octahedron palette needs 4 <= a/b < 5");
  return Palette::consecutive(a, b, {"X", "Y", "Z", "P", "Q", "T"}, a - 4 * b);
}

GadgetInstance build_p4_gadget(const std::vector<int>& X,
                               const std::vector<int>& Y,
                               const std::vector<int>& P,
                               const std::vector<int>& T) {
  const int b = static_cast<int>(X.size());
  const int a = 2 * b + static_cast<int>(T.size());
  require(b >= 1, "block X must be nonempty");
  require(static_cast<int>(Y.size()) == b && static_cast<int>(P.size()) == b,
          "blocks X, Y, P must share the unit size b");
  require(2 * b <= a && a < 3 * b, "the path gadget needs 2 <= a/b < 3");

  Palette pal;
  pal.a = a;
  pal.b = b;
  pal.blocks = {{"X", X}, {"Y", Y}, {"P", P}, {"T", T}};
  for (auto& [name, blk] : pal.blocks) std::sort(blk.begin(), blk.end());
  pal.validate();

  GadgetInstance g;
  g.palette = pal;
  g.hubs = {0, 3};
  g.instance.b = b;
  g.instance.graph = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  for (int v = 0; v < 4; ++v)
    g.instance.graph.set_label(v, std::to_string(v + 1));
  g.instance.lists.lists = {
      pal.block("X"),
      pal.join({"X", "P", "T"}),
      pal.join({"Y", "P", "T"}),
      pal.block("Y"),
  };
  g.instance.validate();
  return g;
}

const std::vector<std::pair<int, int>>& f1_edges() {
  // vertex ids 0..8 carry the figure names 1..9; hubs are 1 and 9.
  // Between the hubs sit two diamonds 2-3-4-5 and 5-6-7-8 (the long
  // diagonals 2-5 and 5-8 are absent).
  static const std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {0, 4}, {0, 5}, {0, 7},  // 1-2, 1-3, 1-5, 1-6, 1-8
      {8, 1}, {8, 3}, {8, 4}, {8, 6}, {8, 7},  // 9-2, 9-4, 9-5, 9-7, 9-8
      {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4},  // 2-3, 2-4, 3-4, 3-5, 4-5
      {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7},  // 5-6, 5-7, 6-7, 6-8, 7-8
  };
  return edges;
}

const std::vector<std::vector<std::string>>& f1_list_blocks() {
  // Transcribed lists for vertices 1..9. They satisfy the structural
  // constraints the lemma's proof leans on: every list has size 4b+|T|
  // except the hub lists X and Y; vertices missing X (resp. Y) from their
  // list are exactly the ones not adjacent to hub 1 (resp. 9); the usable
  // colors on 3 and 4 are exactly PQRT; L(2) meets L(5) outside XY in PT,
  // and L(5) meets L(8) outside XY in RT.
  static const std::vector<std::vector<std::string>> blocks = {
      {"X"},                      // 1
      {"X", "Y", "P", "Q", "T"},  // 2
      {"X", "P", "Q", "R", "T"},  // 3
      {"Y", "P", "Q", "R", "T"},  // 4
      {"X", "Y", "P", "R", "T"},  // 5
      {"X", "P", "Q", "R", "T"},  // 6
      {"Y", "P", "Q", "R", "T"},  // 7
      {"X", "Y", "Q", "R", "T"},  // 8
      {"Y"},                      // 9
  };
  return blocks;
}

namespace {

void check_f_palette(const Palette& pal) {
  pal.validate();
  for (const char* name : {"X", "Y", "P", "Q", "R", "T"})
    require(pal.has(name), "the planar piece needs blocks X,Y,P,Q,R,T");
  require(static_cast<int>(pal.block("T").size()) == pal.a - 4 * pal.b,
          "block T must have size a-4b");
  require(4 * pal.b <= pal.a && 5 * pal.a < 22 * pal.b,
          "the planar pieces need 4 <= a/b < 22/5");
}

Graph f1_graph() {
  Graph g = Graph::from_edges(9, f1_edges());
  for (int v = 0; v < 9; ++v) g.set_label(v, std::to_string(v + 1));
  return g;
}

}  // namespace

GadgetInstance build_f1(const Palette& palette) {
  check_f_palette(palette);
  GadgetInstance g;
  g.palette = palette;
  g.hubs = {0, 8};
  g.instance.b = palette.b;
  g.instance.graph = f1_graph();
  for (const auto& names : f1_list_blocks())
    g.instance.lists.lists.push_back(palette.join(names));
  g.instance.validate();
  return g;
}

GadgetInstance build_f2(const Palette& palette) {
  check_f_palette(palette);
  GadgetInstance g;
  g.palette = palette;
  g.hubs = {0, 8};
  g.instance.b = palette.b;
  auto pasted = paste(f1_graph(), f1_graph(), {{0, 0}, {8, 8}});
  Graph& graph = pasted.graph;  // second copy's 2..8 became ids 9..15
  graph.add_edge(7, 15);        // the 8-8' edge
  for (int v = 9; v <= 15; ++v)
    graph.set_label(v, std::to_string(v - 7) + "'");
  g.instance.graph = graph;
  const auto& blocks = f1_list_blocks();
  auto& lists = g.instance.lists.lists;
  lists.resize(16);
  for (int v = 0; v < 9; ++v) lists[v] = palette.join(blocks[v]);
  for (int v = 1; v <= 7; ++v) lists[8 + v] = lists[v];  // mirrored lists
  g.instance.validate();
  return g;
}

GadgetInstance build_octahedron_gadget(const Palette& palette) {
  palette.validate();
  for (const char* name : {"X", "Y", "Z", "P", "Q", "T"})
    require(palette.has(name), "the octahedron gadget needs blocks X,Y,Z,P,Q,T");
  require(static_cast<int>(palette.block("T").size()) ==
              palette.a - 4 * palette.b,
          "block T must have size a-4b");
  require(4 * palette.b <= palette.a && palette.a < 5 * palette.b,
          "the octahedron gadget needs 4 <= a/b < 5");

  GadgetInstance g;
  g.palette = palette;
  g.hubs = {0, 1, 2};
  g.instance.b = palette.b;
  // all pairs except the antipodal ones {1,4},{2,5},{3,6}
  g.instance.graph = Graph::from_edges(
      6, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 5}, {2, 3},
          {2, 4}, {3, 4}, {3, 5}, {4, 5}});
  for (int v = 0; v < 6; ++v)
    g.instance.graph.set_label(v, std::to_string(v + 1));
  g.instance.lists.lists = {
      palette.block("X"),
      palette.block("Y"),
      palette.block("Z"),
      palette.join({"Y", "Z", "P", "Q", "T"}),
      palette.join({"X", "Z", "P", "Q", "T"}),
      palette.join({"X", "Y", "P", "Q", "T"}),
  };
  g.instance.validate();
  return g;
}

GadgetInstance build_trivial_counterexample(int t, int a, int b) {
  require(t >= 2 && t <= 4, "t must be 2, 3, or 4");
  require(b >= 1 && a >= 1, "need positive a and b");
  require(a < (t - 1) * b, "the complete-graph counterexample needs a/b < t-1");
  GadgetInstance g;
  g.palette.a = a;
  g.palette.b = b;
  g.instance.b = b;
  const int n = t - 1;
  g.instance.graph = Graph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.instance.graph.add_edge(u, v);
  g.instance.lists.declared_size = a;
  g.instance.lists.lists.assign(n, iota_range(0, a));
  for (int v = 0; v < n; ++v) {
    g.instance.graph.set_label(v, std::to_string(v + 1));
    g.hubs.push_back(v);
  }
  g.instance.validate();
  return g;
}

namespace {

// Shared scaffolding of the pasted counterexamples: hubs 0..k-1 carrying the
// list {0..a-1}, pairwise adjacent, plus q copies realizing the tuples.
struct PasteBuild {
  GadgetInstance gadget;
  NonChoosabilityCertificate cert;

  PasteBuild(int a, int b, int k, const std::vector<std::string>& hub_names) {
    gadget.instance.b = b;
    gadget.instance.lists.declared_size = a;
    gadget.palette.a = a;
    gadget.palette.b = b;
    cert.b = b;
    cert.hub_list = iota_range(0, a);
    gadget.instance.graph = Graph(k);
    for (int i = 0; i < k; ++i) {
      gadget.hubs.push_back(i);
      cert.hubs.push_back(i);
      gadget.instance.graph.set_label(i, hub_names[i]);
      gadget.instance.lists.lists.push_back(cert.hub_list);
      for (int j = 0; j < i; ++j) gadget.instance.graph.add_edge(j, i);
    }
  }
};

CounterexampleResult complete_graph_fallback(int n_vertices, int a, int b,
                                             int k,
                                             const std::vector<std::string>& hub_names) {
  PasteBuild pb(a, b, k, hub_names);
  Graph& g = pb.gadget.instance.graph;
  while (g.n() < n_vertices) {
    int v = g.add_vertex();
    pb.gadget.instance.lists.lists.push_back(pb.cert.hub_list);
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  }
  // one copy claim per tuple, all sharing the non-hub remainder (no disjoint
  // tuple exists at all when a < k*b, leaving a certificate with no copies)
  std::vector<int> rest;
  for (int v = k; v < n_vertices; ++v) rest.push_back(v);
  if (a >= k * b) {
    for (const auto& tuple : enumerate_disjoint_tuples(a, b, k))
      pb.cert.copies.push_back({tuple, rest});
  }
  pb.gadget.instance.validate();
  return {std::move(pb.gadget), std::move(pb.cert)};
}

}  // namespace

CounterexampleResult build_clique_counterexample(int t, int a, int b) {
  require(t == 3 || t == 4,
          "a hub-pair certificate needs at least two vertices: t must be 3 or 4");
  require(b >= 1 && a >= 1, "need positive a and b");
  require(a < (t - 1) * b, "the complete-graph counterexample needs a/b < t-1");
  std::vector<std::string> names;
  for (int i = 0; i < 2; ++i) names.push_back(std::to_string(i + 1));
  return complete_graph_fallback(t - 1, a, b, 2, names);
}

CounterexampleResult build_bipartite_counterexample(int a, int b) {
  require(b >= 1 && a >= 1, "need positive a and b");
  require(a < 3 * b, "the bipartite counterexample needs a/b < 3");
  if (a < 2 * b) return complete_graph_fallback(2, a, b, 2, {"1", "4"});

  PasteBuild pb(a, b, 2, {"1", "4"});
  Graph& g = pb.gadget.instance.graph;
  auto& lists = pb.gadget.instance.lists.lists;
  const auto P = iota_range(a, a + b);
  const auto T = iota_range(a + b, 2 * a - b);
  pb.gadget.palette.blocks = {{"P", P}, {"T", T}};

  const auto tuples = enumerate_disjoint_tuples(a, b, 2);
  for (size_t i = 0; i < tuples.size(); ++i) {
    const auto& X = tuples[i][0];
    const auto& Y = tuples[i][1];
    const int v2 = g.add_vertex();
    const int v3 = g.add_vertex();
    g.set_label(v2, "2#" + std::to_string(i));
    g.set_label(v3, "3#" + std::to_string(i));
    g.add_edge(0, v2);
    g.add_edge(v2, v3);
    g.add_edge(v3, 1);
    lists.push_back(sorted_union({&X, &P, &T}));
    lists.push_back(sorted_union({&Y, &P, &T}));
    pb.cert.copies.push_back({tuples[i], {v2, v3}});
  }
  pb.gadget.instance.validate();
  return {std::move(pb.gadget), std::move(pb.cert)};
}

CounterexampleResult build_planar_counterexample(int a, int b) {
  require(b >= 1 && a >= 1, "need positive a and b");
  require(5 * a < 22 * b, "the planar counterexample needs a/b < 22/5");
  if (a < 4 * b) return complete_graph_fallback(4, a, b, 2, {"1", "9"});

  PasteBuild pb(a, b, 2, {"1", "9"});
  Graph& g = pb.gadget.instance.graph;
  auto& lists = pb.gadget.instance.lists.lists;
  const auto P = iota_range(a, a + b);
  const auto Q = iota_range(a + b, a + 2 * b);
  const auto R = iota_range(a + 2 * b, a + 3 * b);
  const auto T = iota_range(a + 3 * b, 2 * a - b);
  pb.gadget.palette.blocks = {{"P", P}, {"Q", Q}, {"R", R}, {"T", T}};

  const auto& piece_blocks = f1_list_blocks();
  const auto tuples = enumerate_disjoint_tuples(a, b, 2);
  for (size_t i = 0; i < tuples.size(); ++i) {
    const auto& X = tuples[i][0];
    const auto& Y = tuples[i][1];
    // ids of the doubled piece: figure vertex 1 is hub 0, figure vertex 9 is
    // hub 1, names 2..8 map to base+0..base+6 and 2'..8' to base+7..base+13
    const int base = g.n();
    std::vector<int> copy_vertices;
    for (int half = 0; half < 2; ++half) {
      for (int name = 2; name <= 8; ++name) {
        int v = g.add_vertex();
        copy_vertices.push_back(v);
        g.set_label(v, std::to_string(name) + (half ? "'#" : "#") +
                           std::to_string(i));
        std::vector<int> list;
        for (const auto& block : piece_blocks[name - 1]) {
          const std::vector<int>* src = nullptr;
          if (block == "X") src = &X;
          else if (block == "Y") src = &Y;
          else if (block == "P") src = &P;
          else if (block == "Q") src = &Q;
          else if (block == "R") src = &R;
          else src = &T;
          list.insert(list.end(), src->begin(), src->end());
        }
        std::sort(list.begin(), list.end());
        lists.push_back(std::move(list));
      }
    }
    auto piece_id = [&](int half, int name) {
      if (name == 1) return 0;
      if (name == 9) return 1;
      return base + 7 * half + (name - 2);
    };
    for (int half = 0; half < 2; ++half)
      for (auto [x, y] : f1_edges())
        g.add_edge(piece_id(half, x + 1), piece_id(half, y + 1));
    g.add_edge(piece_id(0, 8), piece_id(1, 8));  // the 8-8' edge
    pb.cert.copies.push_back({tuples[i], copy_vertices});
  }
  pb.gadget.instance.validate();
  return {std::move(pb.gadget), std::move(pb.cert)};
}

CounterexampleResult build_k5mf_counterexample(int a, int b) {
  require(b >= 1 && a >= 1, "need positive a and b");
  require(a < 5 * b, "the K5-minor-free counterexample needs a/b < 5");
  if (a < 4 * b) return complete_graph_fallback(4, a, b, 3, {"1", "2", "3"});

  PasteBuild pb(a, b, 3, {"1", "2", "3"});
  Graph& g = pb.gadget.instance.graph;
  auto& lists = pb.gadget.instance.lists.lists;
  const auto P = iota_range(a, a + b);
  const auto Q = iota_range(a + b, a + 2 * b);
  const auto T = iota_range(a + 2 * b, 2 * a - 2 * b);
  pb.gadget.palette.blocks = {{"P", P}, {"Q", Q}, {"T", T}};

  const auto tuples = enumerate_disjoint_tuples(a, b, 3);
  for (size_t i = 0; i < tuples.size(); ++i) {
    const auto& X = tuples[i][0];
    const auto& Y = tuples[i][1];
    const auto& Z = tuples[i][2];
    const int v4 = g.add_vertex();
    const int v5 = g.add_vertex();
    const int v6 = g.add_vertex();
    for (int j = 0; j < 3; ++j)
      g.set_label(v4 + j, std::to_string(4 + j) + "#" + std::to_string(i));
    // octahedron copy: 4,5,6 mutually adjacent, each missing its antipode
    g.add_edge(v4, v5);
    g.add_edge(v4, v6);
    g.add_edge(v5, v6);
    g.add_edge(v4, 1);
    g.add_edge(v4, 2);
    g.add_edge(v5, 0);
    g.add_edge(v5, 2);
    g.add_edge(v6, 0);
    g.add_edge(v6, 1);
    lists.push_back(sorted_union({&Y, &Z, &P, &Q, &T}));
    lists.push_back(sorted_union({&X, &Z, &P, &Q, &T}));
    lists.push_back(sorted_union({&X, &Y, &P, &Q, &T}));
    pb.cert.copies.push_back({tuples[i], {v4, v5, v6}});
  }
  pb.gadget.instance.validate();
  return {std::move(pb.gadget), std::move(pb.cert)};
}

namespace {

// rotations of the f1 piece, outer face 1-2-9-8 (ids 0,1,8,7)
const std::vector<std::vector<int>>& f1_rotations() {
  static const std::vector<std::vector<int>> rot = {
      {1, 2, 4, 5, 7},           // 1: 2,3,5,6,8
      {2, 0, 8, 3},              // 2: 3,1,9,4
      {0, 1, 3, 4},              // 3: 1,2,4,5
      {4, 2, 1, 8},              // 4: 5,3,2,9
      {5, 0, 2, 3, 8, 6},        // 5: 6,1,3,4,9,7
      {0, 4, 6, 7},              // 6: 1,5,7,8
      {7, 5, 4, 8},              // 7: 8,6,5,9
      {0, 5, 6, 8},              // 8: 1,6,7,9
      {7, 6, 4, 3, 1},           // 9: 8,7,5,4,2
  };
  return rot;
}

}  // namespace

PlaneGraph f1_plane_fixture(const Palette& palette) {
  PlaneGraph pg;
  pg.graph = build_f1(palette).instance.graph;
  pg.rotation = f1_rotations();
  pg.outer_face = {0, 1, 8, 7};
  return pg;
}

PlaneGraph f2_plane_fixture(const Palette& palette) {
  PlaneGraph pg;
  pg.graph = build_f2(palette).instance.graph;
  // First copy keeps its rotations; the mirrored copy reverses them. At the
  // shared vertices the second fan sits inside the first copy's outer gap,
  // and the new 8-8' edge splits the quad 1-8-9-8' between the copies.
  const auto& base = f1_rotations();
  auto mirrored = [&](int v) {
    std::vector<int> r(base[v].rbegin(), base[v].rend());
    for (int& u : r)
      if (u != 0 && u != 8) u += 8;
    return r;
  };
  pg.rotation.resize(16);
  for (int v = 1; v <= 7; ++v) {
    pg.rotation[v] = base[v];
    pg.rotation[v + 8] = mirrored(v);
  }
  pg.rotation[0] = {1, 2, 4, 5, 7, 15, 13, 12, 10, 9};
  pg.rotation[8] = {7, 6, 4, 3, 1, 9, 11, 12, 14, 15};
  pg.rotation[7].push_back(15);   // 8: [1,6,7,9] + 8'
  pg.rotation[15].push_back(7);   // 8': [9,6',7',1] + 8
  pg.outer_face = {0, 1, 8, 9};   // 1-2-9-2'
  return pg;
}

}  // namespace abchoose

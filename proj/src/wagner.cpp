#include "abchoose/wagner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "abchoose/colors.hpp"
#include "abchoose/embedder.hpp"
#include "abchoose/planar_color.hpp"

namespace abchoose {

Graph m8() {
  Graph g(8);
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);
  return g;
}

namespace {

bool is_clique(const Graph& g, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (!g.has_edge(verts[i], verts[j])) return false;
  return true;
}

// components of g with the given vertices removed, as sorted original-id arrays
std::vector<std::vector<int>> components_without(const Graph& g,
                                                 const std::vector<int>& removed) {
  std::vector<char> banned(g.n(), 0), seen(g.n(), 0);
  for (int v : removed) banned[v] = 1;
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.n(); ++s) {
    if (banned[s] || seen[s]) continue;
    std::vector<int> comp, stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v))
        if (!banned[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<SeparatingClique> split_at(const Graph& g,
                                         const std::vector<int>& clique) {
  auto comps = components_without(g, clique);
  if (comps.size() < 2) return std::nullopt;
  // the side of the smallest outside vertex, fused back with the clique
  auto smallest = std::min_element(comps.begin(), comps.end(),
                                   [](const auto& a, const auto& b) {
                                     return a.front() < b.front();
                                   });
  SeparatingClique sc;
  sc.clique = clique;
  std::vector<int> side1 = *smallest, side2;
  for (const auto& comp : comps)
    if (&comp != &*smallest)
      side2.insert(side2.end(), comp.begin(), comp.end());
  for (int v : clique) {
    side1.push_back(v);
    side2.push_back(v);
  }
  std::sort(side1.begin(), side1.end());
  std::sort(side2.begin(), side2.end());
  sc.g1 = induced_subgraph(g, side1, &sc.g1_vertices);
  sc.g2 = induced_subgraph(g, side2, &sc.g2_vertices);
  return sc;
}

}  // namespace

std::optional<SeparatingClique> find_separating_clique(const Graph& g) {
  const int n = g.n();
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      if (auto sc = split_at(g, {u, v})) return sc;
    }
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      for (int w : g.neighbors(u)) {
        if (w <= v || !g.has_edge(v, w)) continue;
        if (auto sc = split_at(g, {u, v, w})) return sc;
      }
    }
  return std::nullopt;
}

namespace {

Graph eval_node(const ConstructionTree::Node& node) {
  if (node.leaf) {
    if (node.left || node.right)
      throw std::invalid_argument("tree node is both leaf and paste");
    return *node.leaf;
  }
  if (!node.left || !node.right)
    throw std::invalid_argument("paste node is missing a child");
  Graph left = eval_node(*node.left);
  Graph right = eval_node(*node.right);
  if (node.identify.size() < 2 || node.identify.size() > 3)
    throw std::invalid_argument("paste site must have 2 or 3 vertices");
  std::vector<int> site_left, site_right;
  for (auto [r, l] : node.identify) {
    site_right.push_back(r);
    site_left.push_back(l);
  }
  if (!is_clique(left, site_left) || !is_clique(right, site_right))
    throw std::invalid_argument("paste site must be a clique on both sides");
  return paste(left, right, node.identify).graph;
}

}  // namespace

Graph build_from_tree(const ConstructionTree& tree) {
  if (!tree.root) throw std::invalid_argument("construction tree is empty");
  return eval_node(*tree.root);
}

namespace {

struct Extender {
  const Graph& g;
  const std::vector<ColorSet> lists;
  const int m;
  std::vector<std::vector<int>> phi;

  Extender(const Graph& g_, const ListAssignment& la, int m_)
      : g(g_), lists([&] {
          std::vector<ColorSet> ls;
          for (const auto& l : la.lists) ls.push_back(ColorSet::of(l));
          return ls;
        }()),
        m(m_) {
    phi.resize(g.n());
  }

  // lexicographically least m-set from v's list avoiding its colored
  // neighbors inside the current vertex set
  std::vector<int> greedy_pick(int v, const std::vector<char>& in_sub) {
    ColorSet avail = lists[v];
    for (int u : g.neighbors(v))
      if (in_sub[u] && !phi[u].empty()) avail -= ColorSet::of(phi[u]);
    std::vector<int> out = avail.to_vector();
    if (static_cast<int>(out.size()) < m)
      throw std::logic_error("greedy extension ran out of colors");
    out.resize(m);
    return out;
  }

  void color_greedily(const std::vector<int>& verts) {
    std::vector<char> in_sub(g.n(), 0);
    for (int v : verts) in_sub[v] = 1;
    for (int v : verts)
      if (phi[v].empty()) phi[v] = greedy_pick(v, in_sub);
  }

  void recurse(const std::vector<int>& verts, std::vector<int> hub) {
    const int sub_n = static_cast<int>(verts.size());
    if (sub_n == static_cast<int>(hub.size())) return;
    if (sub_n <= 4) {  // every vertex sees at most 3 others
      color_greedily(verts);
      return;
    }
    std::vector<int> old_of_new;
    Graph sub = induced_subgraph(g, verts, &old_of_new);

    if (auto sc = find_separating_clique(sub)) {
      // original ids of both sides and of the cut clique
      auto lift = [&](const std::vector<int>& ids) {
        std::vector<int> out;
        for (int v : ids) out.push_back(old_of_new[v]);
        std::sort(out.begin(), out.end());
        return out;
      };
      std::vector<int> cut = lift(sc->clique);
      std::vector<int> side1 = lift(sc->g1_vertices);
      std::vector<int> side2 = lift(sc->g2_vertices);
      // the colored hub is a clique, so it sits whole on one side
      bool hub_on_1 = true, hub_on_2 = true;
      for (int h : hub) {
        if (!std::binary_search(side1.begin(), side1.end(), h))
          hub_on_1 = false;
        if (!std::binary_search(side2.begin(), side2.end(), h))
          hub_on_2 = false;
      }
      if (!hub_on_1 && !hub_on_2)
        throw std::logic_error("precolored clique straddles a cut");
      if (!hub_on_1) std::swap(side1, side2);
      recurse(side1, hub);
      recurse(side2, cut);  // the cut is now colored and anchors the rest
      return;
    }

    // atom: either the exceptional 3-regular piece or a plane triangulation
    const int sub_e = static_cast<int>(sub.edges().size());
    if (sub_n == 8 && sub_e == 12 && isomorphic(sub, m8())) {
      color_greedily(verts);
      return;
    }
    if (sub_e != 3 * sub_n - 6)
      throw std::invalid_argument(
          "graph does not decompose into triangulations and the 3-regular piece");

    // grow the hub to a precolored triangle x, y, z
    std::vector<char> in_sub(g.n(), 0);
    for (int v : verts) in_sub[v] = 1;
    std::vector<int> tri = hub;
    if (tri.empty()) tri.push_back(verts.front());
    if (phi[tri[0]].empty()) phi[tri[0]] = greedy_pick(tri[0], in_sub);
    if (tri.size() == 1) {
      for (int u : g.neighbors(tri[0]))
        if (in_sub[u]) {
          tri.push_back(u);
          break;
        }
      phi[tri[1]] = greedy_pick(tri[1], in_sub);
    }
    if (tri.size() == 2) {
      int z = -1;
      for (int u : g.neighbors(tri[0])) {
        if (u != tri[1] && in_sub[u] && g.has_edge(u, tri[1])) {
          z = u;
          break;
        }
      }
      if (z < 0) throw std::logic_error("triangulation edge misses a triangle");
      tri.push_back(z);
      if (!phi[z].empty())
        throw std::logic_error("grown triangle vertex already colored");
      phi[z] = greedy_pick(z, in_sub);
    }

    auto embedded = embed_planar(sub);
    if (!embedded)
      throw std::invalid_argument(
          "graph does not decompose into triangulations and the 3-regular piece");
    PlaneGraph pg = *embedded;
    // a triangle of an uncut triangulation bounds a face; put ours outside
    std::vector<int> new_of_old(g.n(), -1);
    for (int i = 0; i < sub_n; ++i) new_of_old[old_of_new[i]] = i;
    std::set<int> want = {new_of_old[tri[0]], new_of_old[tri[1]],
                          new_of_old[tri[2]]};
    bool found = false;
    for (const auto& face : faces(pg)) {
      if (std::set<int>(face.begin(), face.end()) == want) {
        pg.outer_face = face;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("precolored triangle bounds no face");

    // the third corner keeps only its own and the edge colors, forcing it
    ListAssignment inner_lists;
    const int x = tri[0], y = tri[1], z = tri[2];
    ColorSet corner = ColorSet::of(phi[x]) | ColorSet::of(phi[y]) |
                      ColorSet::of(phi[z]);
    for (int i = 0; i < sub_n; ++i) {
      const int orig = old_of_new[i];
      if (orig == x) inner_lists.lists.push_back(phi[x]);
      else if (orig == y) inner_lists.lists.push_back(phi[y]);
      else if (orig == z) inner_lists.lists.push_back(corner.to_vector());
      else {
        std::vector<int> five = lists[orig].to_vector();
        five.resize(5 * m);
        inner_lists.lists.push_back(std::move(five));
      }
    }
    PrecoloredEdge pre{new_of_old[x], new_of_old[y], phi[x], phi[y]};
    Multicoloring inner = tv_color(pg, inner_lists, m, pre);
    for (int i = 0; i < sub_n; ++i) {
      const int orig = old_of_new[i];
      if (phi[orig].empty()) phi[orig] = inner.colors(i);
    }
  }
};

}  // namespace

Multicoloring extend_coloring(const Graph& g, const ListAssignment& lists,
                              int m, const std::vector<int>& H,
                              const std::map<int, std::vector<int>>& phiH) {
  if (m < 1) throw std::invalid_argument("fold size m must be positive");
  lists.validate(g.n());
  if (H.size() > 3 || !is_clique(g, H))
    throw std::invalid_argument("precolored set must be a clique of size <= 3");
  if (phiH.size() != H.size())
    throw std::invalid_argument("precoloring must cover exactly the clique");
  std::set<int> hub_set(H.begin(), H.end());
  if (hub_set.size() != H.size())
    throw std::invalid_argument("precolored clique repeats a vertex");
  ColorSet used;
  for (const auto& [v, set] : phiH) {
    if (!hub_set.count(v))
      throw std::invalid_argument("precoloring names a vertex outside the clique");
    ColorSet s = ColorSet::of(set);
    if (static_cast<int>(set.size()) != m || s.count() != m)
      throw std::invalid_argument("each precolored set needs exactly m colors");
    if (!ColorSet::of(lists.lists[v]).contains(s))
      throw std::invalid_argument("precolored set leaves its own list");
    if (used.intersects(s))
      throw std::invalid_argument("precolored sets must be pairwise disjoint");
    used |= s;
  }
  for (int v = 0; v < g.n(); ++v)
    if (!hub_set.count(v) &&
        static_cast<int>(lists.lists[v].size()) < 5 * m)
      throw std::invalid_argument("every free vertex needs a list of size 5m");
  if (!is_connected(g))
    throw std::invalid_argument("graph must be connected");

  Extender ext(g, lists, m);
  for (const auto& [v, set] : phiH) {
    ext.phi[v] = set;
    std::sort(ext.phi[v].begin(), ext.phi[v].end());
  }
  std::vector<int> verts(g.n());
  for (int v = 0; v < g.n(); ++v) verts[v] = v;
  std::vector<int> hub = H;
  std::sort(hub.begin(), hub.end());
  ext.recurse(verts, hub);

  Multicoloring out;
  out.b = m;
  for (int v = 0; v < g.n(); ++v) {
    std::sort(ext.phi[v].begin(), ext.phi[v].end());
    out.phi[v] = ext.phi[v];
  }
  return out;
}

}  // namespace abchoose

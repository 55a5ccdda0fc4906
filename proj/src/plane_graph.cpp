#include "abchoose/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace abchoose {

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  const size_t n = a.size();
  if (n == 0) return true;
  auto matches = [&](const std::vector<int>& w) {
    for (size_t shift = 0; shift < n; ++shift) {
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i)
        if (w[(shift + i) % n] != b[i]) ok = false;
      if (ok) return true;
    }
    return false;
  };
  if (matches(a)) return true;
  std::vector<int> rev(a.rbegin(), a.rend());
  return matches(rev);
}

std::vector<std::vector<int>> PlaneGraph::faces() const {
  const int n = graph.n();
  if (static_cast<int>(rotation.size()) != n)
    throw std::invalid_argument("rotation size does not match vertex count");
  // position of u within rotation[v]
  std::vector<std::map<int, int>> pos(n);
  for (int v = 0; v < n; ++v) {
    auto nbrs = graph.neighbors(v);
    if (rotation[v].size() != nbrs.size())
      throw std::invalid_argument("rotation of a vertex misses an edge");
    auto sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != nbrs)
      throw std::invalid_argument(
          "rotation of a vertex is not a permutation of its neighbors");
    for (size_t i = 0; i < rotation[v].size(); ++i) pos[v][rotation[v][i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> out;
  std::vector<std::map<int, char>> seen(n);  // seen[u][v]: directed edge (u,v)
  for (int u0 = 0; u0 < n; ++u0) {
    for (int v0 : rotation[u0]) {
      if (seen[u0].count(v0)) continue;
      std::vector<int> walk;
      int u = u0, v = v0;
      while (!seen[u].count(v)) {
        seen[u][v] = 1;
        walk.push_back(u);
        int i = pos[v].at(u);
        int w = rotation[v][(i + 1) % rotation[v].size()];
        u = v;
        v = w;
      }
      out.push_back(std::move(walk));
    }
  }
  return out;
}

std::vector<int> PlaneGraph::outer_walk() const {
  for (const auto& f : faces())
    if (same_cycle(f, outer_face)) return f;
  throw std::invalid_argument("outer_face matches no facial walk");
}

void PlaneGraph::validate() const {
  auto fs = faces();  // validates the rotation system as a side effect
  bool found = false;
  for (const auto& f : fs)
    if (same_cycle(f, outer_face)) found = true;
  if (!found) throw std::invalid_argument("outer_face matches no facial walk");
  if (is_connected(graph)) {
    long euler = static_cast<long>(graph.n()) - graph.edge_count() +
                 static_cast<long>(fs.size());
    if (euler != 2)
      throw std::invalid_argument("embedding violates Euler's formula");
  }
}

bool PlaneGraph::is_near_triangulation() const {
  if (!is_two_connected(graph) || graph.n() < 3) return false;
  auto fs = faces();
  // A triangle's two faces have the same cyclic vertex sequence, so take the
  // first match as the outer one instead of demanding a unique match.
  int outer_idx = -1;
  for (size_t i = 0; i < fs.size(); ++i)
    if (same_cycle(fs[i], outer_face)) {
      outer_idx = static_cast<int>(i);
      break;
    }
  if (outer_idx < 0) return false;
  for (size_t i = 0; i < fs.size(); ++i)
    if (static_cast<int>(i) != outer_idx && fs[i].size() != 3) return false;
  return true;
}

}  // namespace abchoose

#include "abchoose/embedder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "abchoose/graph.hpp"

namespace abchoose {

namespace {

// Some cycle of a 2-connected graph, found from the first DFS back edge.
std::vector<int> find_cycle(const Graph& g) {
  const int n = g.n();
  std::vector<int> parent(n, -1);
  std::vector<char> visited(n, 0);
  std::vector<int> cycle;
  std::function<bool(int)> dfs = [&](int v) {
    visited[v] = 1;
    for (int u : g.neighbors(v)) {
      if (u == parent[v]) continue;
      if (visited[u]) {  // back edge: walk the tree path v .. u
        cycle = {u};
        for (int w = v; w != u; w = parent[w]) cycle.push_back(w);
        std::reverse(cycle.begin() + 1, cycle.end());
        return true;
      }
      parent[u] = v;
      if (dfs(u)) return true;
    }
    return false;
  };
  parent[0] = 0;
  if (!dfs(0)) throw std::invalid_argument("graph has no cycle");
  return cycle;
}

struct Bridge {
  std::vector<int> interior;     // component vertices outside the embedded part
  std::vector<int> attachments;  // sorted embedded vertices it touches
};

}  // namespace

std::optional<std::vector<std::vector<int>>> planar_rotation(const Graph& g) {
  const int n = g.n();
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  if (n <= 2) {
    std::vector<std::vector<int>> rot(n);
    if (n == 2 && g.has_edge(0, 1)) {
      rot[0] = {1};
      rot[1] = {0};
    }
    return rot;
  }
  if (!is_two_connected(g))
    throw std::invalid_argument("embedding needs a 2-connected graph");

  std::vector<char> in_h(n, 0);
  std::set<std::pair<int, int>> h_edges;  // embedded, as ordered pairs u < v
  auto has_h_edge = [&](int u, int v) {
    return h_edges.count({std::min(u, v), std::max(u, v)}) > 0;
  };
  auto add_h_edge = [&](int u, int v) {
    h_edges.insert({std::min(u, v), std::max(u, v)});
  };

  std::vector<int> cycle = find_cycle(g);
  std::vector<std::vector<int>> faces_list = {
      cycle, std::vector<int>(cycle.rbegin(), cycle.rend())};
  for (size_t i = 0; i < cycle.size(); ++i) {
    in_h[cycle[i]] = 1;
    add_h_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
  }

  const size_t total_edges = g.edges().size();
  while (h_edges.size() < total_edges) {
    // bridges: components of G minus the embedded vertices, plus single
    // unembedded chords between embedded vertices
    std::vector<Bridge> bridges;
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
      if (in_h[s] || comp[s] != -1) continue;
      Bridge br;
      comp[s] = static_cast<int>(bridges.size());
      std::queue<int> bfs;
      bfs.push(s);
      std::set<int> att;
      while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        br.interior.push_back(v);
        for (int u : g.neighbors(v)) {
          if (in_h[u]) {
            att.insert(u);
          } else if (comp[u] == -1) {
            comp[u] = comp[s];
            bfs.push(u);
          }
        }
      }
      br.attachments.assign(att.begin(), att.end());
      bridges.push_back(std::move(br));
    }
    for (auto [u, v] : g.edges())
      if (in_h[u] && in_h[v] && !has_h_edge(u, v))
        bridges.push_back(Bridge{{}, {u, v}});

    // admissible faces contain every attachment of the bridge
    int best = -1, best_count = 0, best_face = -1;
    for (size_t i = 0; i < bridges.size(); ++i) {
      int count = 0, first = -1;
      for (size_t f = 0; f < faces_list.size(); ++f) {
        std::set<int> on_face(faces_list[f].begin(), faces_list[f].end());
        bool ok = true;
        for (int a : bridges[i].attachments)
          if (!on_face.count(a)) {
            ok = false;
            break;
          }
        if (ok) {
          ++count;
          if (first < 0) first = static_cast<int>(f);
        }
      }
      if (count == 0) return std::nullopt;  // this bridge has nowhere to go
      if (best < 0 || count < best_count) {
        best = static_cast<int>(i);
        best_count = count;
        best_face = first;
      }
    }

    // route a path through the chosen bridge between two attachments
    const Bridge& br = bridges[best];
    std::vector<int> path;
    if (br.interior.empty()) {
      path = {br.attachments[0], br.attachments[1]};
    } else {
      const int a1 = br.attachments[0];
      std::vector<int> prev(n, -1);
      std::queue<int> bfs;
      for (int v : g.neighbors(a1))
        if (!in_h[v] && comp[v] == comp[br.interior[0]] && prev[v] == -1) {
          prev[v] = a1;
          bfs.push(v);
        }
      int goal = -1;
      while (!bfs.empty() && goal < 0) {
        int v = bfs.front();
        bfs.pop();
        for (int u : g.neighbors(v)) {
          if (in_h[u] && u != a1) {
            prev[u] = v;
            goal = u;
            break;
          }
          if (!in_h[u] && prev[u] == -1) {
            prev[u] = v;
            bfs.push(u);
          }
        }
      }
      if (goal < 0) throw std::logic_error("bridge has a single attachment");
      for (int v = goal; v != a1; v = prev[v]) path.push_back(v);
      path.push_back(a1);
      std::reverse(path.begin(), path.end());
    }

    // split the host face along the path
    std::vector<int> face = faces_list[best_face];
    faces_list.erase(faces_list.begin() + best_face);
    const int m = static_cast<int>(face.size());
    int pi = -1, pj = -1;
    for (int t = 0; t < m; ++t) {
      if (face[t] == path.front()) pi = t;
      if (face[t] == path.back()) pj = t;
    }
    std::vector<int> side1, side2;
    for (int t = pi;; t = (t + 1) % m) {  // arc from path.front() to path.back()
      side1.push_back(face[t]);
      if (t == pj) break;
    }
    for (int t = pj;; t = (t + 1) % m) {  // arc back from path.back()
      side2.push_back(face[t]);
      if (t == pi) break;
    }
    for (size_t t = path.size() - 1; t + 1 >= 3; --t) side1.push_back(path[t - 1]);
    for (size_t t = 1; t + 1 < path.size(); ++t) side2.push_back(path[t]);
    faces_list.push_back(std::move(side1));
    faces_list.push_back(std::move(side2));

    for (int v : path) in_h[v] = 1;
    for (size_t t = 0; t + 1 < path.size(); ++t)
      add_h_edge(path[t], path[t + 1]);
  }

  // stitch rotations: a face corner (a, v, b) says b follows a around v
  std::vector<std::map<int, int>> succ(n);
  for (const auto& face : faces_list) {
    const int m = static_cast<int>(face.size());
    for (int t = 0; t < m; ++t) {
      int a = face[t], v = face[(t + 1) % m], b = face[(t + 2) % m];
      if (succ[v].count(a)) throw std::logic_error("inconsistent face corners");
      succ[v][a] = b;
    }
  }
  std::vector<std::vector<int>> rotation(n);
  for (int v = 0; v < n; ++v) {
    const auto& nbrs = g.neighbors(v);
    if (nbrs.empty()) continue;
    int cur = nbrs[0];
    for (size_t step = 0; step < nbrs.size(); ++step) {
      rotation[v].push_back(cur);
      auto it = succ[v].find(cur);
      if (it == succ[v].end()) throw std::logic_error("rotation does not close");
      cur = it->second;
    }
    if (cur != nbrs[0]) throw std::logic_error("rotation does not close");
  }
  return rotation;
}

std::optional<PlaneGraph> embed_planar(const Graph& g) {
  auto rot = planar_rotation(g);
  if (!rot) return std::nullopt;
  PlaneGraph pg;
  pg.graph = g;
  pg.rotation = std::move(*rot);
  if (g.n() >= 2) pg.outer_face = faces(pg).front();
  return pg;
}

}  // namespace abchoose

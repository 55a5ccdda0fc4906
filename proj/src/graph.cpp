#include "abchoose/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace abchoose {

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n()) throw std::out_of_range("vertex id out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return;  // already present
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

PasteResult paste(const Graph& g1, const Graph& g2,
                  const std::map<int, int>& identify) {
  for (auto [v2, v1] : identify) {
    if (v2 < 0 || v2 >= g2.n() || v1 < 0 || v1 >= g1.n())
      throw std::out_of_range("paste: identification vertex out of range");
  }
  PasteResult r;
  r.graph = g1;
  r.map2.assign(g2.n(), -1);
  for (auto [v2, v1] : identify) r.map2[v2] = v1;
  for (int v2 = 0; v2 < g2.n(); ++v2) {
    if (r.map2[v2] >= 0) continue;
    r.map2[v2] = r.graph.add_vertex();
    r.graph.set_label(r.map2[v2], g2.label(v2));
  }
  for (auto [v2, v1] : identify) {
    if (r.graph.label(v1).empty()) r.graph.set_label(v1, g2.label(v2));
  }
  for (auto [u, v] : g2.edges()) {
    int mu = r.map2[u], mv = r.map2[v];
    if (mu == mv)
      throw std::invalid_argument("paste: identification creates a self-loop");
    r.graph.add_edge(mu, mv);
  }
  return r;
}

DegeneracyResult degeneracy_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  DegeneracyResult r;
  r.order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    r.d = std::max(r.d, deg[best]);
    r.order.push_back(best);
    removed[best] = 1;
    for (int u : g.neighbors(best))
      if (!removed[u]) --deg[u];
  }
  return r;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.n();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.n() == 0 || connected_components(g).size() == 1;
}

bool is_bipartite(const Graph& g) {
  const int n = g.n();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_two_connected(const Graph& g) {
  if (!is_connected(g)) return false;
  const int n = g.n();
  if (n <= 2) return true;
  // remove each vertex in turn and test connectivity of the rest
  for (int v = 0; v < n; ++v) {
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int u = 0; u < n; ++u)
      if (u != v) rest.push_back(u);
    if (!is_connected(induced_subgraph(g, rest))) return false;
  }
  return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* old_of_new) {
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> new_of_old(g.n(), -1);
  for (size_t i = 0; i < verts.size(); ++i) new_of_old[verts[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i) {
    h.set_label(static_cast<int>(i), g.label(verts[i]));
    for (int u : g.neighbors(verts[i]))
      if (new_of_old[u] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), new_of_old[u]);
  }
  if (old_of_new) *old_of_new = std::move(verts);
  return h;
}

namespace {
bool clique_search(const Graph& g, int k, std::vector<int>& cur,
                   const std::vector<int>& cand) {
  if (static_cast<int>(cur.size()) == k) return true;
  for (size_t i = 0; i < cand.size(); ++i) {
    int v = cand[i];
    std::vector<int> next;
    for (size_t j = i + 1; j < cand.size(); ++j)
      if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
    if (static_cast<int>(cur.size()) + 1 + static_cast<int>(next.size()) < k)
      continue;
    cur.push_back(v);
    if (clique_search(g, k, cur, next)) return true;
    cur.pop_back();
  }
  return false;
}
}  // namespace

bool contains_clique(const Graph& g, int k) {
  if (k <= 0) return true;
  if (k == 1) return g.n() > 0;
  std::vector<int> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> cur;
  return clique_search(g, k, cur, all);
}

namespace {
bool extend_iso(const Graph& a, const Graph& b, std::vector<int>& map,
                std::vector<char>& used, int v) {
  if (v == a.n()) return true;
  for (int w = 0; w < b.n(); ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (extend_iso(a, b, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}
}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  if (a.n() > 10)
    throw std::invalid_argument("isomorphic: only graphs with <= 10 vertices");
  auto degs = [](const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.n(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return false;
  std::vector<int> map(a.n(), -1);
  std::vector<char> used(b.n(), 0);
  return extend_iso(a, b, map, used, 0);
}

}  // namespace abchoose

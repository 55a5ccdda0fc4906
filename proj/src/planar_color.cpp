#include "abchoose/planar_color.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <stdexcept>

#include "abchoose/colors.hpp"

namespace abchoose {

namespace {

// lexicographically least k-subset of a color set
std::vector<int> least_subset(const ColorSet& avail, int k) {
  std::vector<int> out = avail.to_vector();
  if (static_cast<int>(out.size()) < k)
    throw std::logic_error("color reservoir ran dry");
  out.resize(k);
  return out;
}

struct Colorer {
  const PlaneGraph& pg;
  const int m;
  const bool debug;
  std::vector<ColorSet> lists;          // shrinks as fans reserve colors
  std::vector<std::vector<int>> phi;    // empty = uncolored
  std::vector<char> active;             // scratch: membership of current verts

  Colorer(const PlaneGraph& pg_, const ListAssignment& la, int m_, bool dbg)
      : pg(pg_), m(m_), debug(dbg) {
    for (const auto& l : la.lists) lists.push_back(ColorSet::of(l));
    phi.resize(pg.graph.n());
    active.resize(pg.graph.n());
  }

  void check_cycle(const std::vector<int>& verts, const std::vector<int>& D) {
    std::set<int> vs(verts.begin(), verts.end());
    if (vs.size() != verts.size())
      throw std::logic_error("duplicate vertex in subproblem");
    for (size_t i = 0; i < D.size(); ++i) {
      if (!vs.count(D[i])) throw std::logic_error("cycle leaves subproblem");
      if (D.size() > 2 && !pg.graph.has_edge(D[i], D[(i + 1) % D.size()]))
        throw std::logic_error("cycle positions are not adjacent");
    }
    if (phi[D[0]].empty() || phi[D[1]].empty())
      throw std::logic_error("leading cycle edge is not precolored");
  }

  // interior components of the subproblem and the cycle vertices they touch
  struct InteriorPart {
    std::vector<int> vertices;
    std::set<int> attachments;
  };
  std::vector<InteriorPart> interior_parts(const std::vector<int>& verts,
                                           const std::vector<int>& D) {
    std::set<int> on_d(D.begin(), D.end());
    for (int v : verts) active[v] = 1;
    std::vector<InteriorPart> parts;
    std::set<int> seen;
    for (int s : verts) {
      if (on_d.count(s) || seen.count(s)) continue;
      InteriorPart part;
      std::vector<int> stack = {s};
      seen.insert(s);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        part.vertices.push_back(v);
        for (int u : pg.graph.neighbors(v)) {
          if (!active[u]) continue;
          if (on_d.count(u)) {
            part.attachments.insert(u);
          } else if (!seen.count(u)) {
            seen.insert(u);
            stack.push_back(u);
          }
        }
      }
      parts.push_back(std::move(part));
    }
    for (int v : verts) active[v] = 0;
    return parts;
  }

  void recurse(std::vector<int> verts, std::vector<int> D) {
    if (debug) check_cycle(verts, D);
    const int k = static_cast<int>(D.size());
    if (k == 2) return;  // both endpoints precolored, nothing else remains

    // cut at a chord of the outer cycle if one exists
    std::vector<int> pos(pg.graph.n(), -1);
    for (int i = 0; i < k; ++i) pos[D[i]] = i;
    int ci = -1, cj = -1;
    long best_other = -1;
    std::vector<InteriorPart> parts;
    bool parts_ready = false;
    for (int i = 0; i < k; ++i) {
      for (int u : pg.graph.neighbors(D[i])) {
        int j = (u >= 0 && u < pg.graph.n()) ? pos[u] : -1;
        if (j <= i + 1) continue;               // wrong order or consecutive
        if (i == 0 && j == k - 1) continue;     // consecutive around the wrap
        if (!parts_ready) {
          parts = interior_parts(verts, D);
          parts_ready = true;
        }
        // size of the side that does not contain the precolored edge
        long other = (i == 0) ? (k - j + 1) : (j - i + 1);
        for (const auto& part : parts) {
          bool in_arc = true;  // inside positions i..j
          bool all_ends = true;
          for (int att : part.attachments) {
            if (pos[att] < i || pos[att] > j) in_arc = false;
            if (att != D[i] && att != D[j]) all_ends = false;
          }
          if (all_ends)
            throw std::logic_error("interior part hangs on a single chord");
          if (in_arc == (i != 0)) other += part.vertices.size();
        }
        if (best_other < 0 || other < best_other ||
            (other == best_other &&
             std::minmax(D[i], u) < std::minmax(D[ci], D[cj]))) {
          best_other = other;
          ci = i;
          cj = j;
        }
      }
    }

    if (ci >= 0) {
      split_at_chord(D, ci, cj, parts);
      return;
    }

    // no chord: peel the last outer vertex w against a reserved 2m-set
    const int u = D[0], x = D[k - 2], w = D[k - 1];
    ColorSet reserve_pool = lists[w] - ColorSet::of(phi[u]);
    std::vector<int> S = least_subset(reserve_pool, 2 * m);
    ColorSet s_set = ColorSet::of(S);

    // the fan: w's current neighbors in rotation order from u to x
    for (int v : verts) active[v] = 1;
    std::vector<int> ring;
    for (int nb : pg.rotation[w])
      if (active[nb]) ring.push_back(nb);
    for (int v : verts) active[v] = 0;
    const int deg = static_cast<int>(ring.size());
    int pu = -1, px = -1;
    for (int t = 0; t < deg; ++t) {
      if (ring[t] == u) pu = t;
      if (ring[t] == x) px = t;
    }
    if (pu < 0 || px < 0)
      throw std::logic_error("outer neighbors missing from the fan ring");
    std::vector<int> fan;  // interior neighbors ordered from u towards x
    if ((pu + 1) % deg == px) {
      for (int t = (px + 1) % deg; t != pu; t = (t + 1) % deg)
        fan.push_back(ring[t]);
      std::reverse(fan.begin(), fan.end());
    } else if ((px + 1) % deg == pu) {
      for (int t = (pu + 1) % deg; t != px; t = (t + 1) % deg)
        fan.push_back(ring[t]);
    } else {
      throw std::logic_error("outer gap missing at the peeled vertex");
    }
    for (int f : fan) lists[f] -= s_set;

    std::vector<int> next_d(D.begin(), D.end() - 1);
    next_d.insert(next_d.end(), fan.rbegin(), fan.rend());
    std::vector<int> next_verts;
    for (int v : verts)
      if (v != w) next_verts.push_back(v);
    recurse(std::move(next_verts), std::move(next_d));

    phi[w] = least_subset(s_set - ColorSet::of(phi[x]), m);
  }

  void split_at_chord(const std::vector<int>& D, int i, int j,
                      const std::vector<InteriorPart>& parts) {
    const int k = static_cast<int>(D.size());
    std::vector<int> arc_in;  // positions i..j
    for (int t = i; t != (j + 1) % k; t = (t + 1) % k) arc_in.push_back(D[t]);
    std::vector<int> arc_out;  // positions j..i, through the wrap
    for (int t = j; t != (i + 1) % k; t = (t + 1) % k) arc_out.push_back(D[t]);

    // the precolored edge D[0]-D[1] lies on arc_in exactly when i == 0
    std::vector<int> cycle_uv, cycle_other;
    if (i == 0) {
      cycle_uv = arc_in;  // starts D[0], D[1], ends at D[j]
      cycle_other = {D[0], D[j]};  // chord first, then the wrap arc
      cycle_other.insert(cycle_other.end(), arc_out.begin() + 1,
                         arc_out.end() - 1);
    } else {
      cycle_uv = arc_out;  // contains D[0], D[1]; rotate them to the front
      std::rotate(cycle_uv.begin(),
                  std::find(cycle_uv.begin(), cycle_uv.end(), D[0]),
                  cycle_uv.end());
      cycle_other = {D[j], D[i]};
      cycle_other.insert(cycle_other.end(), arc_in.begin() + 1,
                         arc_in.end() - 1);
    }

    std::vector<int> pos(pg.graph.n(), -1);
    for (int t = 0; t < k; ++t) pos[D[t]] = t;
    auto in_arc = [&](int v) { return pos[v] >= i && pos[v] <= j; };
    std::vector<int> verts_uv = cycle_uv, verts_other = cycle_other;
    for (const auto& part : parts) {
      bool arc_side = true;
      for (int att : part.attachments)
        if (!in_arc(att)) arc_side = false;
      bool uv_side = (arc_side == (i == 0));
      auto& bucket = uv_side ? verts_uv : verts_other;
      bucket.insert(bucket.end(), part.vertices.begin(), part.vertices.end());
    }
    recurse(std::move(verts_uv), std::move(cycle_uv));
    recurse(std::move(verts_other), std::move(cycle_other));
  }
};

}  // namespace

Multicoloring tv_color(const PlaneGraph& pg, const ListAssignment& lists,
                       int m, const PrecoloredEdge& pre, bool debug_checks) {
  if (m < 1) throw std::invalid_argument("fold size m must be positive");
  pg.validate();
  if (!pg.is_near_triangulation())
    throw std::invalid_argument("graph is not a near-triangulation");
  lists.validate(pg.graph.n());

  // the precolored edge must span consecutive outer vertices
  std::vector<int> outer = pg.outer_walk();
  const int len = static_cast<int>(outer.size());
  int start = -1;
  bool forward = true;
  for (int t = 0; t < len; ++t) {
    if (outer[t] != pre.u) continue;
    if (outer[(t + 1) % len] == pre.v) { start = t; forward = true; }
    else if (outer[(t + len - 1) % len] == pre.v) { start = t; forward = false; }
  }
  if (start < 0)
    throw std::invalid_argument("precolored pair is not an outer edge");
  std::vector<int> D;
  for (int t = 0; t < len; ++t)
    D.push_back(outer[((start + (forward ? t : len - t)) % len + len) % len]);

  if (static_cast<int>(pre.set_u.size()) != m ||
      static_cast<int>(pre.set_v.size()) != m)
    throw std::invalid_argument("precolored sets must have size m");
  ColorSet su = ColorSet::of(pre.set_u), sv = ColorSet::of(pre.set_v);
  if (su.count() != m || sv.count() != m || su.intersects(sv))
    throw std::invalid_argument("precolored sets must be disjoint m-sets");
  if (!ColorSet::of(lists.lists[pre.u]).contains(su) ||
      !ColorSet::of(lists.lists[pre.v]).contains(sv))
    throw std::invalid_argument("precolored sets must come from the lists");

  std::set<int> on_outer(outer.begin(), outer.end());
  for (int v = 0; v < pg.graph.n(); ++v) {
    if (v == pre.u || v == pre.v) continue;
    const int need = on_outer.count(v) ? 3 * m : 5 * m;
    if (static_cast<int>(lists.lists[v].size()) < need)
      throw std::invalid_argument("a color list is too small for its role");
  }

  Colorer colorer(pg, lists, m, debug_checks);
  colorer.phi[pre.u] = pre.set_u;
  colorer.phi[pre.v] = pre.set_v;
  std::vector<int> verts(pg.graph.n());
  for (int v = 0; v < pg.graph.n(); ++v) verts[v] = v;
  colorer.recurse(std::move(verts), std::move(D));

  Multicoloring result;
  result.b = m;
  for (int v = 0; v < pg.graph.n(); ++v) {
    std::sort(colorer.phi[v].begin(), colorer.phi[v].end());
    result.phi[v] = colorer.phi[v];
  }
  return result;
}

PlaneGraph generate_near_triangulation(int n, uint64_t seed) {
  if (n < 3) throw std::invalid_argument("need at least 3 vertices");
  PlaneGraph pg;
  pg.graph = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  pg.rotation = {{1, 2}, {2, 0}, {0, 1}};
  pg.outer_face = {0, 2, 1};
  std::vector<std::array<int, 3>> inner = {{0, 1, 2}};

  std::mt19937_64 engine(seed);
  for (int x = 3; x < n; ++x) {
    const size_t pick = engine() % inner.size();
    const auto [a, b, c] = inner[pick];
    pg.graph.add_vertex();
    pg.graph.add_edge(x, a);
    pg.graph.add_edge(x, b);
    pg.graph.add_edge(x, c);
    pg.rotation.push_back({b, a, c});
    // each corner keeps its face-walk predecessor just before the new vertex
    auto wedge = [&](int corner, int before) {
      auto& rot = pg.rotation[corner];
      rot.insert(std::find(rot.begin(), rot.end(), before) + 1, x);
    };
    wedge(a, c);
    wedge(b, a);
    wedge(c, b);
    inner[pick] = {a, b, x};
    inner.push_back({b, c, x});
    inner.push_back({c, a, x});
  }
  return pg;
}

}  // namespace abchoose

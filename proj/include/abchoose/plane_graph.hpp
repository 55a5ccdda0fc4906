#pragma once

#include <vector>

#include "abchoose/graph.hpp"

namespace abchoose {

// A graph together with a combinatorial embedding: rotation[v] lists the
// neighbors of v in cyclic order, and outer_face designates one facial walk
// as the unbounded face. Face traversal uses the convention that the
// directed edge (u, v) is followed by (v, w) where w is the successor of u
// in rotation[v]; with that convention each directed edge lies on exactly
// one facial walk.
struct PlaneGraph {
  Graph graph;
  std::vector<std::vector<int>> rotation;
  std::vector<int> outer_face;

  // All facial walks as vertex cycles (first vertex not repeated).
  std::vector<std::vector<int>> faces() const;

  // Checks: rotation[v] is a permutation of neighbors(v); outer_face matches
  // one of the computed faces up to rotation/reversal; for a connected graph
  // Euler's formula n - e + f = 2 holds. Throws on violation.
  void validate() const;

  // 2-connected and every face except the outer one is a triangle.
  bool is_near_triangulation() const;

  // The outer face as computed by faces() (same cyclic sequence as
  // outer_face but in traversal orientation). Throws if outer_face matches
  // no facial walk.
  std::vector<int> outer_walk() const;
};

// Free-function spelling used by callers that mirror the operation table.
inline std::vector<std::vector<int>> faces(const PlaneGraph& pg) {
  return pg.faces();
}

// True when walks a and b are the same cyclic sequence, optionally reversed.
bool same_cycle(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace abchoose

#pragma once

#include <cstdint>
#include <vector>

#include "abchoose/instance.hpp"
#include "abchoose/plane_graph.hpp"

namespace abchoose {

// One outer edge whose endpoints come with fixed disjoint color m-sets.
struct PrecoloredEdge {
  int u = 0;
  int v = 0;
  std::vector<int> set_u;
  std::vector<int> set_v;
};

// m-fold list-color a near-triangulation whose outer cycle carries the
// precolored edge (u, v). List sizes must be at least 3m on the other outer
// vertices and at least 5m on interior vertices; the recursion (cutting at a
// chord of the outer cycle, else peeling the last outer vertex against a
// reserved 2m-set) then always succeeds. Throws std::invalid_argument when a
// precondition fails and std::logic_error if the search state ever becomes
// impossible anyway. With debug_checks the recursion re-validates its cycle
// invariants at every step.
Multicoloring tv_color(const PlaneGraph& pg, const ListAssignment& lists,
                       int m, const PrecoloredEdge& pre,
                       bool debug_checks = false);

// Random stacked triangulation on n >= 3 vertices, built by repeatedly
// placing a new vertex inside a uniformly chosen inner face and joining it
// to the three corners. Deterministic per seed; the result has 3n-6 edges
// and outer face {0, 1, 2}.
PlaneGraph generate_near_triangulation(int n, uint64_t seed);

}  // namespace abchoose

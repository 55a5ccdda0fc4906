#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abchoose/colors.hpp"
#include "abchoose/graph.hpp"

namespace abchoose {

// Named pairwise-disjoint color blocks (X, Y, Z, P, Q, R, T). Block names
// are bookkeeping only; the solver sees plain integer colors.
struct Palette {
  int a = 0;  // list size
  int b = 0;  // fold size / unit block size
  std::map<std::string, std::vector<int>> blocks;

  bool has(const std::string& name) const { return blocks.count(name) != 0; }
  const std::vector<int>& block(const std::string& name) const;

  // Union of the named blocks, ascending.
  std::vector<int> join(const std::vector<std::string>& names) const;

  // Pairwise disjointness and |X|=|Y|=|Z|=|P|=|Q|=|R|=b for the blocks that
  // are present. The size of T is checked by each constructing operation
  // (it differs between the gadget families). Throws on violation.
  void validate() const;

  // Blocks X.. then T laid out consecutively from color 0: unit blocks of
  // size b for each name except "T", which takes t_size colors.
  static Palette consecutive(int a, int b, const std::vector<std::string>& names,
                             int t_size);
};

// Per-vertex color lists, vertex id -> ascending colors.
struct ListAssignment {
  std::vector<std::vector<int>> lists;
  std::optional<int> declared_size;

  // Sorted/deduplicated lists, one per vertex, within the color universe,
  // and matching declared_size when set. Throws on violation.
  void validate(int n) const;
};

// A b-fold coloring, possibly partial: vertices absent from phi are
// uncolored. Color sets are kept ascending.
struct Multicoloring {
  std::map<int, std::vector<int>> phi;
  int b = 0;

  bool is_colored(int v) const { return phi.count(v) != 0; }
  const std::vector<int>& colors(int v) const { return phi.at(v); }
  bool complete(int n) const { return static_cast<int>(phi.size()) == n; }
};

struct ChoosabilityInstance {
  Graph graph;
  ListAssignment lists;
  int b = 1;

  void validate() const;
};

// True iff phi is a valid b-fold L-coloring of the instance: every set has
// size b, is contained in its vertex's list, and adjacent vertices receive
// disjoint sets. phi must color every vertex and reference only existing
// vertices; violations of that are input errors (thrown), distinct from an
// invalid coloring (false).
bool validate_coloring(const ChoosabilityInstance& instance,
                       const Multicoloring& phi);

}  // namespace abchoose

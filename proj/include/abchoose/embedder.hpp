#pragma once

#include <optional>
#include <vector>

#include "abchoose/plane_graph.hpp"

namespace abchoose {

// Incremental plane embedding by face splitting: start from a cycle, then
// repeatedly route a path of some bridge through a face that contains all of
// the bridge's attachments, always preferring a bridge with the fewest
// admissible faces. Returns the rotation system of one embedding, or nullopt
// when the graph is not planar.
//
// Requires a connected graph; for n >= 3 it must also be 2-connected (every
// intermediate face is then a simple cycle). Throws std::invalid_argument
// otherwise.
std::optional<std::vector<std::vector<int>>> planar_rotation(const Graph& g);

// Convenience wrapper: same embedding with the first traversal face used as
// the outer face.
std::optional<PlaneGraph> embed_planar(const Graph& g);

}  // namespace abchoose

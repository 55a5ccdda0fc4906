#pragma once

#include <string>

#include "json.hpp"

#include "abchoose/certificates.hpp"
#include "abchoose/gadgets.hpp"
#include "abchoose/instance.hpp"
#include "abchoose/plane_graph.hpp"
#include "abchoose/wagner.hpp"

namespace abchoose {

// Stable on-disk formats. Vertex-indexed maps use the vertex id as a string
// key ("0", "1", ...); color sets and edges are plain arrays.
//
//   graph        {"n": 4, "edges": [[0,1], ...], "labels": {"0": "1", ...}}
//   plane graph  graph + {"rotation": {"0": [...]}, "outer_face": [...]}
//   instance     {"graph": ..., "b": 1, "lists": {"0": [0,1], ...}}
//   gadget       instance + {"hubs": [...], "palette": {"a":, "b":, "blocks":}}
//   coloring     {"b": 1, "phi": {"0": [2], ...}}
//   certificate  {"hubs": [...], "hub_list": [...], "b":, "copies":
//                   [{"tuple": [[...], ...], "vertices": [...]}, ...]}
//   tree         {"leaf": graph} or
//                {"paste": {"left": tree, "right": tree,
//                           "identify": {"right-id": left-id, ...}}}

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json plane_graph_to_json(const PlaneGraph& pg);
PlaneGraph plane_graph_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const ChoosabilityInstance& inst);
ChoosabilityInstance instance_from_json(const nlohmann::json& j);

nlohmann::json gadget_to_json(const GadgetInstance& g);
GadgetInstance gadget_from_json(const nlohmann::json& j);

nlohmann::json coloring_to_json(const Multicoloring& phi);
Multicoloring coloring_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const NonChoosabilityCertificate& cert);
NonChoosabilityCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json tree_to_json(const ConstructionTree& tree);
ConstructionTree tree_from_json(const nlohmann::json& j);

// File helpers; parse and I/O failures surface as std::runtime_error.
nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

}  // namespace abchoose

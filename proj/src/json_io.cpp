#include "abchoose/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace abchoose {

using nlohmann::json;

namespace {

// vertex-keyed object -> dense vector, requiring full 0..n-1 coverage
template <typename T, typename Parse>
std::vector<T> keyed_vector(const json& obj, int n, const char* what,
                            Parse parse) {
  if (!obj.is_object())
    throw std::runtime_error(std::string(what) + " must be an object");
  std::vector<T> out(n);
  std::vector<char> seen(n, 0);
  for (const auto& [key, value] : obj.items()) {
    int v = std::stoi(key);
    if (v < 0 || v >= n)
      throw std::runtime_error(std::string(what) + " names vertex " + key +
                               " outside the graph");
    out[v] = parse(value);
    seen[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v])
      throw std::runtime_error(std::string(what) + " misses vertex " +
                               std::to_string(v));
  return out;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  json labels = json::object();
  for (int v = 0; v < g.n(); ++v)
    if (!g.label(v).empty()) labels[std::to_string(v)] = g.label(v);
  if (!labels.empty()) j["labels"] = std::move(labels);
  return j;
}

Graph graph_from_json(const json& j) {
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::runtime_error("each edge must be a pair [u, v]");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("labels"))
    for (const auto& [key, value] : j.at("labels").items())
      g.set_label(std::stoi(key), value.get<std::string>());
  return g;
}

json plane_graph_to_json(const PlaneGraph& pg) {
  json j = graph_to_json(pg.graph);
  json rot = json::object();
  for (int v = 0; v < pg.graph.n(); ++v)
    rot[std::to_string(v)] = pg.rotation[v];
  j["rotation"] = std::move(rot);
  j["outer_face"] = pg.outer_face;
  return j;
}

PlaneGraph plane_graph_from_json(const json& j) {
  PlaneGraph pg;
  pg.graph = graph_from_json(j);
  pg.rotation = keyed_vector<std::vector<int>>(
      j.at("rotation"), pg.graph.n(), "rotation",
      [](const json& v) { return v.get<std::vector<int>>(); });
  pg.outer_face = j.at("outer_face").get<std::vector<int>>();
  return pg;
}

json instance_to_json(const ChoosabilityInstance& inst) {
  json j;
  j["graph"] = graph_to_json(inst.graph);
  j["b"] = inst.b;
  json lists = json::object();
  for (int v = 0; v < inst.graph.n(); ++v)
    lists[std::to_string(v)] = inst.lists.lists[v];
  j["lists"] = std::move(lists);
  return j;
}

ChoosabilityInstance instance_from_json(const json& j) {
  ChoosabilityInstance inst;
  inst.graph = graph_from_json(j.at("graph"));
  inst.b = j.at("b").get<int>();
  inst.lists.lists = keyed_vector<std::vector<int>>(
      j.at("lists"), inst.graph.n(), "lists",
      [](const json& v) { return v.get<std::vector<int>>(); });
  inst.validate();
  return inst;
}

json gadget_to_json(const GadgetInstance& g) {
  json j = instance_to_json(g.instance);
  j["hubs"] = g.hubs;
  json blocks = json::object();
  for (const auto& [name, colors] : g.palette.blocks) blocks[name] = colors;
  j["palette"] = {{"a", g.palette.a}, {"b", g.palette.b},
                  {"blocks", std::move(blocks)}};
  return j;
}

GadgetInstance gadget_from_json(const json& j) {
  GadgetInstance g;
  g.instance = instance_from_json(j);
  g.hubs = j.at("hubs").get<std::vector<int>>();
  const json& pal = j.at("palette");
  g.palette.a = pal.at("a").get<int>();
  g.palette.b = pal.at("b").get<int>();
  for (const auto& [name, colors] : pal.at("blocks").items())
    g.palette.blocks[name] = colors.get<std::vector<int>>();
  return g;
}

json coloring_to_json(const Multicoloring& phi) {
  json j;
  j["b"] = phi.b;
  json sets = json::object();
  for (const auto& [v, set] : phi.phi) sets[std::to_string(v)] = set;
  j["phi"] = std::move(sets);
  return j;
}

Multicoloring coloring_from_json(const json& j) {
  Multicoloring phi;
  phi.b = j.at("b").get<int>();
  for (const auto& [key, value] : j.at("phi").items())
    phi.phi[std::stoi(key)] = value.get<std::vector<int>>();
  return phi;
}

json certificate_to_json(const NonChoosabilityCertificate& cert) {
  json j;
  j["hubs"] = cert.hubs;
  j["hub_list"] = cert.hub_list;
  j["b"] = cert.b;
  json copies = json::array();
  for (const auto& copy : cert.copies) {
    json tuple = json::array();
    for (const auto& part : copy.tuple) tuple.push_back(part);
    copies.push_back({{"tuple", std::move(tuple)},
                      {"vertices", copy.vertices}});
  }
  j["copies"] = std::move(copies);
  return j;
}

NonChoosabilityCertificate certificate_from_json(const json& j) {
  NonChoosabilityCertificate cert;
  cert.hubs = j.at("hubs").get<std::vector<int>>();
  cert.hub_list = j.at("hub_list").get<std::vector<int>>();
  cert.b = j.at("b").get<int>();
  for (const auto& copy : j.at("copies")) {
    CertificateCopy c;
    for (const auto& part : copy.at("tuple"))
      c.tuple.push_back(part.get<std::vector<int>>());
    c.vertices = copy.at("vertices").get<std::vector<int>>();
    cert.copies.push_back(std::move(c));
  }
  return cert;
}

namespace {

json tree_node_to_json(const ConstructionTree::Node& node) {
  if (node.leaf) return json{{"leaf", graph_to_json(*node.leaf)}};
  if (!node.left || !node.right)
    throw std::runtime_error("paste node is missing a child");
  json identify = json::object();
  for (auto [r, l] : node.identify) identify[std::to_string(r)] = l;
  return json{{"paste",
               {{"left", tree_node_to_json(*node.left)},
                {"right", tree_node_to_json(*node.right)},
                {"identify", std::move(identify)}}}};
}

std::unique_ptr<ConstructionTree::Node> tree_node_from_json(const json& j) {
  auto node = std::make_unique<ConstructionTree::Node>();
  if (j.contains("leaf")) {
    node->leaf = graph_from_json(j.at("leaf"));
    return node;
  }
  const json& p = j.at("paste");
  node->left = tree_node_from_json(p.at("left"));
  node->right = tree_node_from_json(p.at("right"));
  for (const auto& [key, value] : p.at("identify").items())
    node->identify[std::stoi(key)] = value.get<int>();
  return node;
}

}  // namespace

json tree_to_json(const ConstructionTree& tree) {
  if (!tree.root) throw std::runtime_error("construction tree is empty");
  return tree_node_to_json(*tree.root);
}

ConstructionTree tree_from_json(const json& j) {
  ConstructionTree tree;
  tree.root = tree_node_from_json(j);
  return tree;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace abchoose

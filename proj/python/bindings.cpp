// pybind11 bindings over the core operations: graphs, instances, the exact
// solver, gadget/counterexample builders, certificate checking, lemma
// verification, and the two structured coloring routines.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "abchoose/acceptance.hpp"
#include "abchoose/certificates.hpp"
#include "abchoose/embedder.hpp"
#include "abchoose/gadgets.hpp"
#include "abchoose/graph.hpp"
#include "abchoose/instance.hpp"
#include "abchoose/json_io.hpp"
#include "abchoose/planar_color.hpp"
#include "abchoose/plane_graph.hpp"
#include "abchoose/solver.hpp"
#include "abchoose/wagner.hpp"

namespace py = pybind11;
using namespace abchoose;

namespace {

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat: return "sat";
    case SolveStatus::Unsat: return "unsat";
    default: return "budget-exceeded";
  }
}

}  // namespace

PYBIND11_MODULE(_abchoose, m) {
  m.doc() = "exact b-fold list coloring: solver, gadgets, certificates";

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges", &Graph::from_edges, py::arg("n"),
                  py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("add_vertex", &Graph::add_vertex)
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("neighbors", &Graph::neighbors)
      .def("degree", &Graph::degree)
      .def("edges", &Graph::edges)
      .def("label", &Graph::label)
      .def("set_label", &Graph::set_label)
      .def("__eq__",
           [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream os;
        os << "Graph(n=" << g.n() << ", edges=" << g.edge_count() << ")";
        return os.str();
      });

  m.def("paste",
        [](const Graph& g1, const Graph& g2,
           const std::map<int, int>& identify) {
          PasteResult r = paste(g1, g2, identify);
          return py::make_tuple(r.graph, r.map2);
        },
        py::arg("g1"), py::arg("g2"), py::arg("identify"),
        "glue g2 onto g1; returns (graph, map2)");
  m.def("degeneracy_order", [](const Graph& g) {
    DegeneracyResult r = degeneracy_order(g);
    return py::make_tuple(r.d, r.order);
  });
  m.def("is_connected", &is_connected);
  m.def("connected_components", &connected_components);
  m.def("is_bipartite", &is_bipartite);
  m.def("is_two_connected", &is_two_connected);
  m.def("contains_clique", &contains_clique);
  m.def("isomorphic", &isomorphic);

  py::class_<PlaneGraph>(m, "PlaneGraph")
      .def(py::init<>())
      .def_readwrite("graph", &PlaneGraph::graph)
      .def_readwrite("rotation", &PlaneGraph::rotation)
      .def_readwrite("outer_face", &PlaneGraph::outer_face)
      .def("faces", &PlaneGraph::faces)
      .def("validate", &PlaneGraph::validate)
      .def("is_near_triangulation", &PlaneGraph::is_near_triangulation)
      .def("outer_walk", &PlaneGraph::outer_walk);

  m.def("embed_planar", [](const Graph& g) -> py::object {
    auto pg = embed_planar(g);
    if (!pg) return py::none();
    return py::cast(*pg);
  });

  py::class_<ListAssignment>(m, "ListAssignment")
      .def(py::init<>())
      .def(py::init([](std::vector<std::vector<int>> lists) {
             ListAssignment a;
             a.lists = std::move(lists);
             return a;
           }),
           py::arg("lists"))
      .def_readwrite("lists", &ListAssignment::lists)
      .def_readwrite("declared_size", &ListAssignment::declared_size)
      .def("validate", &ListAssignment::validate);

  py::class_<Multicoloring>(m, "Multicoloring")
      .def(py::init<>())
      .def_readwrite("phi", &Multicoloring::phi)
      .def_readwrite("b", &Multicoloring::b)
      .def("colors", &Multicoloring::colors)
      .def("complete", &Multicoloring::complete);

  py::class_<ChoosabilityInstance>(m, "Instance")
      .def(py::init<>())
      .def(py::init([](Graph g, std::vector<std::vector<int>> lists, int b) {
             ChoosabilityInstance inst;
             inst.graph = std::move(g);
             inst.lists.lists = std::move(lists);
             inst.b = b;
             return inst;
           }),
           py::arg("graph"), py::arg("lists"), py::arg("b"))
      .def_readwrite("graph", &ChoosabilityInstance::graph)
      .def_readwrite("lists", &ChoosabilityInstance::lists)
      .def_readwrite("b", &ChoosabilityInstance::b)
      .def("validate", &ChoosabilityInstance::validate);

  m.def("validate_coloring", &validate_coloring);

  // ---- solver ----
  auto solve_result = [](const SolveResult& res) {
    py::dict d;
    d["status"] = status_name(res.status);
    d["witness"] =
        res.witness ? py::cast(res.witness->phi) : py::object(py::none());
    d["nodes"] = res.stats.nodes;
    d["seconds"] = res.stats.seconds;
    return d;
  };
  m.def(
      "solve",
      [solve_result](const ChoosabilityInstance& inst, uint64_t node_budget,
                     double time_budget,
                     const std::map<int, std::vector<int>>& pinned) {
        SolveOptions opts;
        opts.node_budget = node_budget;
        opts.time_budget = time_budget;
        opts.pinned = pinned;
        return solve_result(solve(inst, opts));
      },
      py::arg("instance"), py::arg("node_budget") = 0,
      py::arg("time_budget") = 0.0,
      py::arg("pinned") = std::map<int, std::vector<int>>{});
  m.def("brute_force_oracle",
        [solve_result](const ChoosabilityInstance& inst) {
          return solve_result(brute_force_oracle(inst));
        });
  m.def("greedy_degenerate", [](const ChoosabilityInstance& inst) {
    GreedyResult res = greedy_degenerate(inst);
    py::dict d;
    d["success"] = res.success;
    d["coloring"] = res.success ? py::cast(res.coloring.phi)
                                : py::object(py::none());
    d["failed_vertex"] = res.failed_vertex;
    return d;
  });

  // ---- gadgets and counterexamples ----
  py::class_<Palette>(m, "Palette")
      .def(py::init<>())
      .def_readwrite("a", &Palette::a)
      .def_readwrite("b", &Palette::b)
      .def_readwrite("blocks", &Palette::blocks)
      .def("block", &Palette::block)
      .def("join", &Palette::join)
      .def("validate", &Palette::validate);
  m.def("default_p4_palette", &default_p4_palette);
  m.def("default_f_palette", &default_f_palette);
  m.def("default_octa_palette", &default_octa_palette);

  py::class_<GadgetInstance>(m, "GadgetInstance")
      .def_readwrite("instance", &GadgetInstance::instance)
      .def_readwrite("palette", &GadgetInstance::palette)
      .def_readwrite("hubs", &GadgetInstance::hubs);

  py::class_<CertificateCopy>(m, "CertificateCopy")
      .def(py::init<>())
      .def_readwrite("tuple", &CertificateCopy::tuple)
      .def_readwrite("vertices", &CertificateCopy::vertices);
  py::class_<NonChoosabilityCertificate>(m, "Certificate")
      .def(py::init<>())
      .def_readwrite("hubs", &NonChoosabilityCertificate::hubs)
      .def_readwrite("hub_list", &NonChoosabilityCertificate::hub_list)
      .def_readwrite("b", &NonChoosabilityCertificate::b)
      .def_readwrite("copies", &NonChoosabilityCertificate::copies);
  py::class_<CounterexampleResult>(m, "Counterexample")
      .def_readwrite("gadget", &CounterexampleResult::gadget)
      .def_readwrite("certificate", &CounterexampleResult::certificate);

  m.def("enumerate_disjoint_tuples", &enumerate_disjoint_tuples,
        py::arg("a"), py::arg("b"), py::arg("k"));
  m.def("build_p4_gadget", &build_p4_gadget);
  m.def("build_f1", &build_f1);
  m.def("build_f2", &build_f2);
  m.def("build_octahedron_gadget", &build_octahedron_gadget);
  m.def("build_trivial_counterexample", &build_trivial_counterexample);
  m.def("build_clique_counterexample", &build_clique_counterexample);
  m.def("build_bipartite_counterexample", &build_bipartite_counterexample);
  m.def("build_planar_counterexample", &build_planar_counterexample);
  m.def("build_k5mf_counterexample", &build_k5mf_counterexample);
  m.def("f1_plane_fixture", &f1_plane_fixture);
  m.def("f2_plane_fixture", &f2_plane_fixture);

  // ---- certificates and lemmas ----
  m.def(
      "check_certificate",
      [](const ChoosabilityInstance& inst,
         const NonChoosabilityCertificate& cert, int workers,
         uint64_t copy_node_budget) {
        CertCheckOptions opts;
        opts.workers = workers;
        if (copy_node_budget) opts.copy_node_budget = copy_node_budget;
        CertCheckResult res = check_certificate(inst, cert, opts);
        py::dict d;
        d["valid"] = res.valid;
        d["reason"] = res.reason;
        d["failed_copy"] = res.failed_copy;
        d["seconds"] = res.seconds;
        return d;
      },
      py::arg("instance"), py::arg("certificate"), py::arg("workers") = 1,
      py::arg("copy_node_budget") = 0);
  m.def(
      "verify_lemma",
      [](const std::string& kind, int a, int b, uint64_t node_budget,
         double time_budget) {
        SolveOptions opts;
        opts.node_budget = node_budget;
        opts.time_budget = time_budget;
        LemmaReport rep =
            verify_lemma(lemma_kind_from_string(kind), a, b, opts);
        py::dict d;
        d["passed"] = rep.pass;
        d["budget_exceeded"] = rep.budget_exceeded;
        d["detail"] = rep.detail;
        d["witnesses"] = rep.witnesses;
        return d;
      },
      py::arg("kind"), py::arg("a"), py::arg("b"),
      py::arg("node_budget") = 0, py::arg("time_budget") = 0.0);

  // ---- structured coloring ----
  py::class_<PrecoloredEdge>(m, "PrecoloredEdge")
      .def(py::init([](int u, int v, std::vector<int> set_u,
                       std::vector<int> set_v) {
             PrecoloredEdge pre;
             pre.u = u;
             pre.v = v;
             pre.set_u = std::move(set_u);
             pre.set_v = std::move(set_v);
             return pre;
           }),
           py::arg("u"), py::arg("v"), py::arg("set_u"), py::arg("set_v"))
      .def_readwrite("u", &PrecoloredEdge::u)
      .def_readwrite("v", &PrecoloredEdge::v)
      .def_readwrite("set_u", &PrecoloredEdge::set_u)
      .def_readwrite("set_v", &PrecoloredEdge::set_v);
  m.def(
      "tv_color",
      [](const PlaneGraph& pg, const std::vector<std::vector<int>>& lists,
         int mm, const PrecoloredEdge& pre, bool debug_checks) {
        ListAssignment a;
        a.lists = lists;
        return tv_color(pg, a, mm, pre, debug_checks).phi;
      },
      py::arg("plane_graph"), py::arg("lists"), py::arg("m"),
      py::arg("precolor"), py::arg("debug_checks") = false);
  m.def("generate_near_triangulation", &generate_near_triangulation,
        py::arg("n"), py::arg("seed"));
  m.def("m8", &m8);
  m.def("find_separating_clique", [](const Graph& g) -> py::object {
    auto sc = find_separating_clique(g);
    if (!sc) return py::none();
    py::dict d;
    d["clique"] = sc->clique;
    d["g1"] = sc->g1;
    d["g2"] = sc->g2;
    d["g1_vertices"] = sc->g1_vertices;
    d["g2_vertices"] = sc->g2_vertices;
    return d;
  });
  m.def(
      "extend_coloring",
      [](const Graph& g, const std::vector<std::vector<int>>& lists, int mm,
         const std::vector<int>& H,
         const std::map<int, std::vector<int>>& phiH) {
        ListAssignment a;
        a.lists = lists;
        return extend_coloring(g, a, mm, H, phiH).phi;
      },
      py::arg("graph"), py::arg("lists"), py::arg("m"),
      py::arg("H") = std::vector<int>{},
      py::arg("phiH") = std::map<int, std::vector<int>>{});

  // ---- JSON interop (strings, matching the CLI file formats) ----
  m.def("graph_to_json",
        [](const Graph& g) { return graph_to_json(g).dump(2); });
  m.def("graph_from_json", [](const std::string& s) {
    return graph_from_json(nlohmann::json::parse(s));
  });
  m.def("plane_graph_to_json",
        [](const PlaneGraph& pg) { return plane_graph_to_json(pg).dump(2); });
  m.def("plane_graph_from_json", [](const std::string& s) {
    return plane_graph_from_json(nlohmann::json::parse(s));
  });
  m.def("instance_to_json", [](const ChoosabilityInstance& inst) {
    return instance_to_json(inst).dump(2);
  });
  m.def("instance_from_json", [](const std::string& s) {
    return instance_from_json(nlohmann::json::parse(s));
  });
  m.def("certificate_to_json", [](const NonChoosabilityCertificate& cert) {
    return certificate_to_json(cert).dump(2);
  });
  m.def("certificate_from_json", [](const std::string& s) {
    return certificate_from_json(nlohmann::json::parse(s));
  });
  m.def("coloring_to_json", [](const Multicoloring& phi) {
    return coloring_to_json(phi).dump(2);
  });
  m.def("coloring_from_json", [](const std::string& s) {
    return coloring_from_json(nlohmann::json::parse(s));
  });

  // ---- acceptance harness ----
  m.def(
      "run_acceptance",
      [](uint64_t seed, int workers, const std::vector<int>& only) {
        AcceptanceOptions opts;
        opts.seed = seed;
        opts.workers = workers;
        opts.only = only;
        py::list out;
        for (const CriterionResult& r : run_acceptance(opts)) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["passed"] = r.pass;
          d["budget_hit"] = r.budget_hit;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 0xab5eedULL, py::arg("workers") = 1,
      py::arg("only") = std::vector<int>{});
}

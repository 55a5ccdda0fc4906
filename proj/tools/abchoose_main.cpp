// Command-line front end: gadget and counterexample construction, the exact
// solver, lemma verification, certificate checking, and the two structured
// coloring routines, all over the JSON formats in json_io.hpp.
//
// Exit codes: 0 success/SAT/valid/pass, 1 UNSAT/invalid/fail, 2 usage or
// input error, 3 budget exceeded.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abchoose/acceptance.hpp"
#include "abchoose/certificates.hpp"
#include "abchoose/gadgets.hpp"
#include "abchoose/instance.hpp"
#include "abchoose/json_io.hpp"
#include "abchoose/planar_color.hpp"
#include "abchoose/solver.hpp"
#include "abchoose/wagner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

// Budgets come from the flags when given, else from the environment.
void apply_budgets(abchoose::SolveOptions& opts, std::optional<uint64_t> nodes,
                   std::optional<double> seconds) {
  if (nodes) {
    opts.node_budget = *nodes;
  } else if (const char* env = std::getenv("ABCHOOSE_BUDGET_NODES")) {
    opts.node_budget = std::stoull(env);
  }
  if (seconds) {
    opts.time_budget = *seconds;
  } else if (const char* env = std::getenv("ABCHOOSE_BUDGET_SECONDS")) {
    opts.time_budget = std::stod(env);
  }
}

// A standalone list file is a vertex-keyed object {"0": [colors], ...}; an
// instance file's "lists" member is accepted too.
abchoose::ListAssignment lists_from_file(const std::string& path, int n) {
  nlohmann::json j = abchoose::load_json(path);
  if (j.contains("lists")) j = j.at("lists");
  if (!j.is_object())
    throw std::invalid_argument(path + ": expected a vertex-keyed object");
  abchoose::ListAssignment lists;
  lists.lists.assign(n, {});
  std::vector<bool> seen(n, false);
  for (const auto& [key, value] : j.items()) {
    int v = std::stoi(key);
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument(path + ": bad or repeated vertex " + key);
    seen[v] = true;
    lists.lists[v] = value.get<std::vector<int>>();
    std::sort(lists.lists[v].begin(), lists.lists[v].end());
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v])
      throw std::invalid_argument(path + ": no list for vertex " +
                                  std::to_string(v));
  lists.validate(n);
  return lists;
}

void emit_coloring(const abchoose::Multicoloring& phi,
                   const std::string& out) {
  nlohmann::json j = abchoose::coloring_to_json(phi);
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    abchoose::save_json(out, j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(a:b)-list-coloring workbench"};
  app.require_subcommand(1);

  int workers = 1;
  bool deterministic = false;
  app.add_option("--workers", workers, "parallel certificate copy checks")
      ->check(CLI::PositiveNumber);
  app.add_flag("--deterministic", deterministic,
               "single-threaded, bit-identical outputs");

  std::function<int()> action;

  // ---- gadget ----
  auto* gadget = app.add_subcommand("gadget", "build one gadget instance");
  struct {
    std::string kind, out;
    int a = 0, b = 0;
  } gopt;
  gadget->add_option("--kind", gopt.kind)
      ->required()
      ->check(CLI::IsMember({"p4", "f1", "f2", "octa"}));
  gadget->add_option("--a", gopt.a)->required();
  gadget->add_option("--b", gopt.b)->required();
  gadget->add_option("--out", gopt.out, "output JSON path")->required();
  gadget->callback([&] {
    action = [&]() {
      abchoose::GadgetInstance g;
      if (gopt.kind == "p4") {
        abchoose::Palette pal = abchoose::default_p4_palette(gopt.a, gopt.b);
        g = abchoose::build_p4_gadget(pal.block("X"), pal.block("Y"),
                                      pal.block("P"), pal.block("T"));
      } else if (gopt.kind == "f1") {
        g = abchoose::build_f1(abchoose::default_f_palette(gopt.a, gopt.b));
      } else if (gopt.kind == "f2") {
        g = abchoose::build_f2(abchoose::default_f_palette(gopt.a, gopt.b));
      } else {
        g = abchoose::build_octahedron_gadget(
            abchoose::default_octa_palette(gopt.a, gopt.b));
      }
      abchoose::save_json(gopt.out, abchoose::gadget_to_json(g));
      std::cout << "wrote " << gopt.out << " (" << g.instance.graph.n()
                << " vertices, " << g.instance.graph.edge_count()
                << " edges)\n";
      return kOk;
    };
  });

  // ---- counterexample ----
  auto* cex = app.add_subcommand(
      "counterexample", "build a pasted counterexample with its certificate");
  struct {
    std::string family, out;
    int a = 0, b = 0, t = 0;
  } copt;
  cex->add_option("--family", copt.family)
      ->required()
      ->check(CLI::IsMember({"bipartite", "planar", "k5mf", "clique"}));
  cex->add_option("--a", copt.a)->required();
  cex->add_option("--b", copt.b)->required();
  cex->add_option("--t", copt.t, "clique family only: K_{t-1} is emitted");
  cex->add_option("--out", copt.out, "output directory")->required();
  cex->callback([&] {
    action = [&]() {
      abchoose::CounterexampleResult ce;
      if (copt.family == "bipartite") {
        ce = abchoose::build_bipartite_counterexample(copt.a, copt.b);
      } else if (copt.family == "planar") {
        ce = abchoose::build_planar_counterexample(copt.a, copt.b);
      } else if (copt.family == "k5mf") {
        ce = abchoose::build_k5mf_counterexample(copt.a, copt.b);
      } else {
        if (copt.t == 0)
          throw std::invalid_argument("--family clique needs --t");
        ce = abchoose::build_clique_counterexample(copt.t, copt.a, copt.b);
      }
      std::filesystem::create_directories(copt.out);
      auto path = [&](const char* name) {
        return (std::filesystem::path(copt.out) / name).string();
      };
      abchoose::save_json(path("instance.json"),
                          abchoose::instance_to_json(ce.gadget.instance));
      abchoose::save_json(path("certificate.json"),
                          abchoose::certificate_to_json(ce.certificate));
      std::cout << "wrote " << path("instance.json") << " ("
                << ce.gadget.instance.graph.n() << " vertices) and "
                << path("certificate.json") << " ("
                << ce.certificate.copies.size() << " copies)\n";
      return kOk;
    };
  });

  // ---- solve ----
  auto* slv = app.add_subcommand("solve", "decide b-fold list colorability");
  struct {
    std::string instance, out;
    std::optional<uint64_t> nodes;
    std::optional<double> seconds;
    std::vector<std::string> pins;
  } sopt;
  slv->add_option("--instance", sopt.instance)->required();
  slv->add_option("--budget-nodes", sopt.nodes);
  slv->add_option("--budget-seconds", sopt.seconds);
  slv->add_option("--pin", sopt.pins,
                  "v=c1,c2,... fixes vertex v's color set (repeatable)");
  slv->add_option("--out", sopt.out, "write the witness coloring here");
  slv->callback([&] {
    action = [&]() {
      abchoose::ChoosabilityInstance inst =
          abchoose::instance_from_json(abchoose::load_json(sopt.instance));
      abchoose::SolveOptions opts;
      apply_budgets(opts, sopt.nodes, sopt.seconds);
      for (const std::string& pin : sopt.pins) {
        size_t eq = pin.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("--pin wants v=c1,c2,...: " + pin);
        opts.pinned[std::stoi(pin.substr(0, eq))] =
            parse_int_list(pin.substr(eq + 1));
      }
      abchoose::SolveResult res = abchoose::solve(inst, opts);
      switch (res.status) {
        case abchoose::SolveStatus::Sat:
          std::cout << "sat (" << res.stats.nodes << " nodes, "
                    << res.stats.seconds << "s)\n";
          if (!sopt.out.empty())
            abchoose::save_json(sopt.out,
                                abchoose::coloring_to_json(*res.witness));
          return kOk;
        case abchoose::SolveStatus::Unsat:
          std::cout << "unsat (" << res.stats.nodes << " nodes, "
                    << res.stats.seconds << "s)\n";
          return kFail;
        default:
          std::cout << "budget exceeded (" << res.stats.nodes << " nodes, "
                    << res.stats.seconds << "s)\n";
          return kBudget;
      }
    };
  });

  // ---- verify-lemma ----
  auto* lem = app.add_subcommand("verify-lemma",
                                 "check one gadget lemma exhaustively");
  struct {
    std::string kind;
    int a = 0, b = 0;
    std::optional<uint64_t> nodes;
    std::optional<double> seconds;
  } lopt;
  lem->add_option("--kind", lopt.kind)
      ->required()
      ->check(CLI::IsMember({"p4", "f1", "f2", "octa"}));
  lem->add_option("--a", lopt.a)->required();
  lem->add_option("--b", lopt.b)->required();
  lem->add_option("--budget-nodes", lopt.nodes);
  lem->add_option("--budget-seconds", lopt.seconds);
  lem->callback([&] {
    action = [&]() {
      abchoose::SolveOptions opts;
      apply_budgets(opts, lopt.nodes, lopt.seconds);
      abchoose::LemmaReport rep = abchoose::verify_lemma(
          abchoose::lemma_kind_from_string(lopt.kind), lopt.a, lopt.b, opts);
      std::cout << (rep.pass ? "pass" : rep.budget_exceeded ? "budget exceeded"
                                                            : "FAIL")
                << ": " << rep.detail << "\n";
      return rep.pass ? kOk : rep.budget_exceeded ? kBudget : kFail;
    };
  });

  // ---- check-cert ----
  auto* chk = app.add_subcommand("check-cert",
                                 "validate a non-choosability certificate");
  struct {
    std::string instance, cert;
    std::optional<uint64_t> nodes;
  } kopt;
  chk->add_option("--instance", kopt.instance)->required();
  chk->add_option("--cert", kopt.cert)->required();
  chk->add_option("--budget-nodes", kopt.nodes, "per-copy search budget");
  chk->callback([&] {
    action = [&]() {
      abchoose::ChoosabilityInstance inst =
          abchoose::instance_from_json(abchoose::load_json(kopt.instance));
      abchoose::NonChoosabilityCertificate cert =
          abchoose::certificate_from_json(abchoose::load_json(kopt.cert));
      abchoose::CertCheckOptions opts;
      opts.workers = deterministic ? 1 : workers;
      if (kopt.nodes) {
        opts.copy_node_budget = *kopt.nodes;
      } else if (const char* env = std::getenv("ABCHOOSE_BUDGET_NODES")) {
        opts.copy_node_budget = std::stoull(env);
      }
      abchoose::CertCheckResult res =
          abchoose::check_certificate(inst, cert, opts);
      std::cout << (res.valid ? "valid" : res.reason) << " (" << res.seconds
                << "s)";
      if (res.failed_copy >= 0) std::cout << " at copy " << res.failed_copy;
      std::cout << "\n";
      if (res.valid) return kOk;
      return res.reason == "undetermined-copy" ? kBudget : kFail;
    };
  });

  // ---- color-planar ----
  auto* cpl = app.add_subcommand(
      "color-planar", "m-fold color a near-triangulation from its lists");
  struct {
    std::string plane_graph, lists, precolor, out;
    int m = 1;
  } popt;
  cpl->add_option("--plane-graph", popt.plane_graph)->required();
  cpl->add_option("--lists", popt.lists)->required();
  cpl->add_option("--m", popt.m)->required()->check(CLI::PositiveNumber);
  cpl->add_option("--precolor", popt.precolor,
                  "u,v,setU,setV flat: two vertices then two m-sets")
      ->required();
  cpl->add_option("--out", popt.out, "coloring JSON path (default stdout)");
  cpl->callback([&] {
    action = [&]() {
      abchoose::PlaneGraph pg =
          abchoose::plane_graph_from_json(abchoose::load_json(popt.plane_graph));
      abchoose::ListAssignment lists =
          lists_from_file(popt.lists, pg.graph.n());
      std::vector<int> flat = parse_int_list(popt.precolor);
      if (static_cast<int>(flat.size()) != 2 + 2 * popt.m)
        throw std::invalid_argument(
            "--precolor wants u,v then two m-sets: " +
            std::to_string(2 + 2 * popt.m) + " integers");
      abchoose::PrecoloredEdge pre;
      pre.u = flat[0];
      pre.v = flat[1];
      pre.set_u.assign(flat.begin() + 2, flat.begin() + 2 + popt.m);
      pre.set_v.assign(flat.begin() + 2 + popt.m, flat.end());
      abchoose::Multicoloring phi =
          abchoose::tv_color(pg, lists, popt.m, pre);
      emit_coloring(phi, popt.out);
      return kOk;
    };
  });

  // ---- color-k5mf ----
  auto* ck5 = app.add_subcommand(
      "color-k5mf",
      "extend a clique precoloring through a clique-sum decomposition");
  struct {
    std::string graph, tree, lists, precolor, out;
    int m = 1;
  } wopt;
  ck5->add_option("--graph", wopt.graph)->required();
  ck5->add_option("--tree", wopt.tree, "construction tree to rebuild from");
  ck5->add_option("--lists", wopt.lists)->required();
  ck5->add_option("--m", wopt.m)->required()->check(CLI::PositiveNumber);
  ck5->add_option("--precolor", wopt.precolor,
                  "k vertices then k m-sets, flat comma list (k <= 3)");
  ck5->add_option("--out", wopt.out, "coloring JSON path (default stdout)");
  ck5->callback([&] {
    action = [&]() {
      abchoose::Graph g =
          abchoose::graph_from_json(abchoose::load_json(wopt.graph));
      if (!wopt.tree.empty()) {
        abchoose::ConstructionTree tree =
            abchoose::tree_from_json(abchoose::load_json(wopt.tree));
        abchoose::Graph rebuilt = abchoose::build_from_tree(tree);
        if (!(rebuilt == g))
          throw std::invalid_argument(
              "--tree does not evaluate to the given graph");
      }
      abchoose::ListAssignment lists = lists_from_file(wopt.lists, g.n());
      std::vector<int> H;
      std::map<int, std::vector<int>> phiH;
      if (!wopt.precolor.empty()) {
        std::vector<int> flat = parse_int_list(wopt.precolor);
        if (flat.empty() || flat.size() % (1 + wopt.m) != 0 ||
            flat.size() / (1 + wopt.m) > 3)
          throw std::invalid_argument(
              "--precolor wants k vertices then k m-sets, k <= 3");
        const int k = static_cast<int>(flat.size()) / (1 + wopt.m);
        H.assign(flat.begin(), flat.begin() + k);
        for (int i = 0; i < k; ++i)
          phiH[H[i]] = std::vector<int>(flat.begin() + k + i * wopt.m,
                                        flat.begin() + k + (i + 1) * wopt.m);
      }
      abchoose::Multicoloring phi =
          abchoose::extend_coloring(g, lists, wopt.m, H, phiH);
      emit_coloring(phi, wopt.out);
      return kOk;
    };
  });

  // ---- selftest ----
  auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
  struct {
    std::optional<uint64_t> seed;
    std::string only;
  } topt;
  self->add_option("--seed", topt.seed);
  self->add_option("--only", topt.only, "criterion ids, comma separated");
  self->callback([&] {
    action = [&]() {
      abchoose::AcceptanceOptions opts;
      if (topt.seed) opts.seed = *topt.seed;
      opts.workers = deterministic ? 1 : workers;
      if (!topt.only.empty()) opts.only = parse_int_list(topt.only);
      opts.out = &std::cout;
      std::cout << "seed " << opts.seed << ", workers " << opts.workers
                << "\n";
      auto results = abchoose::run_acceptance(opts);
      int passed = 0;
      for (const auto& r : results) passed += r.pass ? 1 : 0;
      std::cout << passed << "/" << results.size() << " criteria passed\n";
      return abchoose::all_passed(results) ? kOk : kFail;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kFail;
  }
}

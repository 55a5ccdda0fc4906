#include "abchoose/certificates.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "abchoose/gadgets.hpp"

namespace abchoose {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Verdict of the solver on one copy with the hubs pinned to its tuple.
SolveStatus check_one_copy(const ChoosabilityInstance& inst,
                           const NonChoosabilityCertificate& cert,
                           const CertificateCopy& copy,
                           uint64_t node_budget) {
  std::vector<int> verts = copy.vertices;
  verts.insert(verts.end(), cert.hubs.begin(), cert.hubs.end());
  std::vector<int> old_of_new;
  ChoosabilityInstance sub;
  sub.b = inst.b;
  sub.graph = induced_subgraph(inst.graph, verts, &old_of_new);
  std::vector<int> new_of_old(inst.graph.n(), -1);
  for (size_t i = 0; i < old_of_new.size(); ++i)
    new_of_old[old_of_new[i]] = static_cast<int>(i);
  for (int old_id : old_of_new)
    sub.lists.lists.push_back(inst.lists.lists[old_id]);

  SolveOptions opts;
  opts.node_budget = node_budget;
  for (size_t j = 0; j < cert.hubs.size(); ++j)
    opts.pinned[new_of_old[cert.hubs[j]]] = copy.tuple[j];
  return solve(sub, opts).status;
}

}  // namespace

CertCheckResult check_certificate(const ChoosabilityInstance& inst,
                                  const NonChoosabilityCertificate& cert,
                                  const CertCheckOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  inst.validate();
  const int k = static_cast<int>(cert.hubs.size());
  if (k != 2 && k != 3)
    throw std::invalid_argument("certificate must have 2 or 3 hubs");
  if (cert.b != inst.b)
    throw std::invalid_argument("certificate fold b disagrees with instance");
  for (int h : cert.hubs)
    if (h < 0 || h >= inst.graph.n())
      throw std::invalid_argument("certificate hub out of range");
  for (const auto& copy : cert.copies) {
    if (static_cast<int>(copy.tuple.size()) != k)
      throw std::invalid_argument("copy tuple arity disagrees with hub count");
    for (int v : copy.vertices)
      if (v < 0 || v >= inst.graph.n())
        throw std::invalid_argument("copy vertex out of range");
  }

  auto fail = [&](const char* reason, int copy) {
    return CertCheckResult{false, reason, copy, seconds_since(t0)};
  };

  const int a = static_cast<int>(cert.hub_list.size());
  std::vector<int> hub_list = cert.hub_list;
  std::sort(hub_list.begin(), hub_list.end());

  // 1. every list has size a, and the hubs carry exactly the pasting list
  for (const auto& list : inst.lists.lists)
    if (static_cast<int>(list.size()) != a) return fail("list-size", -1);
  for (int h : cert.hubs)
    if (inst.lists.lists[h] != hub_list) return fail("hub-list", -1);

  // 2. the copies enumerate every disjoint hub-color tuple exactly once
  std::vector<std::vector<std::vector<int>>> expected;
  if (a >= k * inst.b) {
    expected = enumerate_disjoint_tuples(a, inst.b, k);
    // relabel through the hub list in case it is not 0..a-1
    for (auto& tuple : expected)
      for (auto& part : tuple)
        for (int& c : part) c = hub_list[c];
  }
  auto claimed = cert.copies;
  std::vector<std::vector<std::vector<int>>> claimed_tuples;
  for (const auto& copy : claimed) claimed_tuples.push_back(copy.tuple);
  std::sort(expected.begin(), expected.end());
  std::sort(claimed_tuples.begin(), claimed_tuples.end());
  if (expected != claimed_tuples) return fail("coverage", -1);

  // 3. the hubs are pairwise adjacent
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!inst.graph.has_edge(cert.hubs[i], cert.hubs[j]))
        return fail("hub-adjacency", -1);

  // 4. each copy is uncolorable once its tuple is pinned on the hubs
  const int q = static_cast<int>(cert.copies.size());
  std::vector<SolveStatus> verdicts(q, SolveStatus::Unsat);
  const int workers = std::max(1, options.workers);
  if (workers == 1 || q <= 1) {
    for (int i = 0; i < q; ++i) {
      verdicts[i] =
          check_one_copy(inst, cert, cert.copies[i], options.copy_node_budget);
      if (verdicts[i] != SolveStatus::Unsat) break;  // scan order is by index
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (int i = next.fetch_add(1); i < q; i = next.fetch_add(1))
          verdicts[i] = check_one_copy(inst, cert, cert.copies[i],
                                       options.copy_node_budget);
      });
    for (auto& th : pool) th.join();
  }
  for (int i = 0; i < q; ++i) {
    if (verdicts[i] == SolveStatus::Sat) return fail("copy-sat", i);
    if (verdicts[i] == SolveStatus::BudgetExceeded)
      return fail("undetermined-copy", i);
  }
  return {true, "ok", -1, seconds_since(t0)};
}

LemmaKind lemma_kind_from_string(const std::string& name) {
  if (name == "p4") return LemmaKind::p4;
  if (name == "f1") return LemmaKind::f1;
  if (name == "f2") return LemmaKind::f2;
  if (name == "octa") return LemmaKind::octa;
  throw std::invalid_argument("unknown lemma name: " + name);
}

std::string to_string(LemmaKind kind) {
  switch (kind) {
    case LemmaKind::p4: return "p4";
    case LemmaKind::f1: return "f1";
    case LemmaKind::f2: return "f2";
    case LemmaKind::octa: return "octa";
  }
  throw std::logic_error("unreachable");
}

namespace {

LemmaReport report_unsat_lemma(const GadgetInstance& gadget,
                               const SolveOptions& options) {
  LemmaReport rep;
  auto res = solve(gadget.instance, options);
  rep.stats = res.stats;
  std::ostringstream detail;
  switch (res.status) {
    case SolveStatus::Unsat:
      rep.pass = true;
      detail << "no admissible coloring exists (" << res.stats.nodes
             << " nodes)";
      break;
    case SolveStatus::Sat:
      rep.pass = false;
      detail << "found an admissible coloring, lemma refuted";
      break;
    case SolveStatus::BudgetExceeded:
      rep.budget_exceeded = true;
      detail << "search budget exhausted after " << res.stats.nodes
             << " nodes";
      break;
  }
  rep.detail = detail.str();
  return rep;
}

}  // namespace

LemmaReport verify_lemma(LemmaKind kind, int a, int b,
                         const SolveOptions& options) {
  if (b < 1) throw std::domain_error("need b >= 1");
  switch (kind) {
    case LemmaKind::p4: {
      if (!(2 * b <= a && a < 3 * b))
        throw std::domain_error("the path lemma needs 2 <= a/b < 3");
      Palette pal = default_p4_palette(a, b);
      return report_unsat_lemma(
          build_p4_gadget(pal.block("X"), pal.block("Y"), pal.block("P"),
                          pal.block("T")),
          options);
    }
    case LemmaKind::f2: {
      if (!(4 * b <= a && 5 * a < 22 * b))
        throw std::domain_error("the doubled piece needs 4 <= a/b < 22/5");
      return report_unsat_lemma(build_f2(default_f_palette(a, b)), options);
    }
    case LemmaKind::octa: {
      if (!(4 * b <= a && a < 5 * b))
        throw std::domain_error("the octahedron lemma needs 4 <= a/b < 5");
      return report_unsat_lemma(build_octahedron_gadget(default_octa_palette(a, b)),
                                options);
    }
    case LemmaKind::f1: {
      if (!(4 * b <= a && 5 * a < 22 * b))
        throw std::domain_error("the planar piece needs 4 <= a/b < 22/5");
      GadgetInstance gadget = build_f1(default_f_palette(a, b));
      const auto T = gadget.palette.block("T");
      if (T.empty())  // the claimed bound degenerates to unsatisfiability
        return report_unsat_lemma(gadget, options);

      LemmaReport rep;
      ColorSet t_set = ColorSet::of(T);
      const int t_size = static_cast<int>(T.size());
      bool violated = false;
      std::string violation;
      auto res = solve_all(
          gadget.instance,
          [&](const Multicoloring& phi) {
            ColorSet used = ColorSet::of(phi.colors(7));  // vertex named 8
            int hit = (used & t_set).count();
            if (2 * hit <= t_size) {
              violated = true;
              std::ostringstream os;
              os << "coloring with |phi(8) & T| = " << hit
                 << " refutes the bound";
              violation = os.str();
              return false;
            }
            return true;
          },
          options);
      rep.stats = res.stats;
      rep.witnesses = res.witnesses;
      if (violated) {
        rep.pass = false;
        rep.detail = violation;
      } else if (!res.complete) {
        rep.budget_exceeded = true;
        std::ostringstream os;
        os << "enumeration budget exhausted after " << res.stats.nodes
           << " nodes (" << res.witnesses << " colorings seen)";
        rep.detail = os.str();
      } else {
        rep.pass = true;
        std::ostringstream os;
        os << "all " << res.witnesses
           << " admissible colorings put more than half of T on vertex 8";
        rep.detail = os.str();
      }
      return rep;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace abchoose

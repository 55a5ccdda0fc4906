#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abchoose/instance.hpp"
#include "abchoose/solver.hpp"

namespace abchoose {

// One copy claim: pinning the hubs to `tuple` makes the subgraph induced by
// `vertices` plus the hubs uncolorable. tuple[j] goes on hub j.
struct CertificateCopy {
  std::vector<std::vector<int>> tuple;
  std::vector<int> vertices;
};

// Machine-checkable witness that an instance admits no b-fold L-coloring,
// decomposed per hub coloring: the hubs are pairwise adjacent and share one
// a-element list, so any coloring restricted to them is a tuple of pairwise
// disjoint b-subsets of that list; the certificate lists every such tuple
// with a copy that refuses it.
struct NonChoosabilityCertificate {
  std::vector<int> hubs;
  std::vector<int> hub_list;
  int b = 0;
  std::vector<CertificateCopy> copies;
};

struct CertCheckOptions {
  int workers = 1;
  // Per-copy search budget; an exhausted copy makes the certificate
  // undetermined, never valid.
  uint64_t copy_node_budget = 5'000'000;
};

struct CertCheckResult {
  bool valid = false;
  // "ok", or the failed clause: "list-size", "hub-list", "coverage",
  // "hub-adjacency", "copy-sat", "undetermined-copy".
  std::string reason;
  int failed_copy = -1;
  double seconds = 0.0;
};

// Validity is exactly these four clauses: (1) every list has size a and the
// hubs carry hub_list itself; (2) the copies' tuples enumerate ALL disjoint
// k-tuples of b-subsets of hub_list exactly once; (3) the hubs are pairwise
// adjacent; (4) each copy's induced subgraph (its vertices plus the hubs),
// with the hubs pinned to its tuple, is unsatisfiable. Together these imply
// the full instance has no b-fold L-coloring.
CertCheckResult check_certificate(const ChoosabilityInstance& instance,
                                  const NonChoosabilityCertificate& cert,
                                  const CertCheckOptions& options = {});

enum class LemmaKind { p4, f1, f2, octa };

LemmaKind lemma_kind_from_string(const std::string& s);
std::string to_string(LemmaKind k);

struct LemmaReport {
  bool pass = false;
  bool budget_exceeded = false;
  std::string detail;
  uint64_t witnesses = 0;  // colorings enumerated (f1 only)
  SolveStats stats;
};

// Check the gadget lemma at parameters (a, b), which must lie in the kind's
// ratio range. p4/f2/octa: the gadget instance must be unsatisfiable (the
// search is complete, so this is exhaustive). f1: every coloring, enumerated
// exhaustively, must use more than half of T on vertex 8; with T empty the
// gadget must be unsatisfiable instead. A run that exhausts its budget
// reports budget_exceeded and never passes.
LemmaReport verify_lemma(LemmaKind kind, int a, int b,
                         const SolveOptions& options = {});

}  // namespace abchoose

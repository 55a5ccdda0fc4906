#pragma once

#include <vector>

#include "abchoose/certificates.hpp"
#include "abchoose/instance.hpp"
#include "abchoose/plane_graph.hpp"

namespace abchoose {

// A gadget: a graph with a crafted list assignment that forbids specific
// colorings of its hub vertices, plus the palette the lists were built from.
struct GadgetInstance {
  ChoosabilityInstance instance;
  Palette palette;
  std::vector<int> hubs;
};

struct CounterexampleResult {
  GadgetInstance gadget;
  NonChoosabilityCertificate certificate;
};

// All k-tuples of pairwise disjoint b-subsets of {0..a-1} in lexicographic
// order (each subset as its ascending vector). The count is
// C(a,b)*C(a-b,b) for k=2 and C(a,b)*C(a-b,b)*C(a-2b,b) for k=3.
std::vector<std::vector<std::vector<int>>> enumerate_disjoint_tuples(int a,
                                                                     int b,
                                                                     int k);

// The four-vertex path 1-2-3-4 with lists X, XPT, YPT, Y; hubs 1 and 4.
// Requires X, Y, P, T pairwise disjoint, |X|=|Y|=|P|=b, and 2 <= a/b < 3
// where a = 2b+|T|.
GadgetInstance build_p4_gadget(const std::vector<int>& X,
                               const std::vector<int>& Y,
                               const std::vector<int>& P,
                               const std::vector<int>& T);

// The nine-vertex planar piece with hubs 1 (list X) and 9 (list Y) and two
// stacked diamonds between them; vertices 2..8 get the lists recorded in
// f1_list_blocks(). Requires blocks X,Y,P,Q,R of size b, |T| = a-4b, and
// 4 <= a/b < 22/5.
GadgetInstance build_f1(const Palette& palette);

// Two copies of the f1 piece glued at both hubs, plus the edge {8, 8'};
// the mirrored vertices repeat their twins' lists.
GadgetInstance build_f2(const Palette& palette);

// The octahedron K_{2,2,2} with antipodal pairs {1,4},{2,5},{3,6}; vertices
// 1,2,3 get X, Y, Z and the opposite vertices get lists whose usable part is
// exactly PQT. Requires blocks X,Y,Z,P,Q of size b, |T| = a-4b, 4 <= a/b < 5.
GadgetInstance build_octahedron_gadget(const Palette& palette);

// K_{t-1} with every list {0..a-1}; not (a:b)-choosable whenever a/b < t-1.
GadgetInstance build_trivial_counterexample(int t, int a, int b);

// The same complete graph, packaged with a hub-pair certificate (so t must
// be 3 or 4: the certificate schema needs two adjacent hubs).
CounterexampleResult build_clique_counterexample(int t, int a, int b);

// Pasted counterexamples: q gadget copies share hub vertices carrying a
// common a-element list, copy i realizing the i-th disjoint tuple as its
// (X, Y[, Z]) blocks, with one fresh block set shared by all copies. Below
// the gadget's ratio range the small complete-graph fallbacks are returned
// (K_2 for a/b < 2, K_4 for a/b < 4), with certificates that carry either no
// copies (no disjoint tuple exists) or the same copy vertices for every
// tuple.
CounterexampleResult build_bipartite_counterexample(int a, int b);  // a/b < 3
CounterexampleResult build_planar_counterexample(int a, int b);     // a/b < 22/5
CounterexampleResult build_k5mf_counterexample(int a, int b);       // a/b < 5

// Default palettes used by the CLI and the lemma verifiers: unit blocks and
// then T laid out consecutively from color 0.
Palette default_p4_palette(int a, int b);    // X,Y,P,T
Palette default_f_palette(int a, int b);     // X,Y,P,Q,R,T
Palette default_octa_palette(int a, int b);  // X,Y,Z,P,Q,T

// Data tables of the f1 transcription: edges on vertex ids 0..8 (figure
// names 1..9) and each vertex's list as palette block names.
const std::vector<std::pair<int, int>>& f1_edges();
const std::vector<std::vector<std::string>>& f1_list_blocks();

// A planar embedding of the f1 piece (outer face 1-2-9-8), kept as a fixture
// so the planarity of the pasted construction is checkable face-by-face.
PlaneGraph f1_plane_fixture(const Palette& palette);

// Embedding of the f2 gadget: second copy drawn mirrored in the outer face
// of the first, outer face 1-2'-9-2.
PlaneGraph f2_plane_fixture(const Palette& palette);

}  // namespace abchoose

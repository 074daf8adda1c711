#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rlpart/approx.hpp"
#include "rlpart/graph.hpp"
#include "rlpart/types.hpp"

namespace rlpart {

struct TOCTInstance {
  Graph g1;
  Graph g2;
  VertexSet x;                             // in g1
  VertexSet y;                             // in g2
  std::vector<std::pair<int, int>> phi;    // x -> y, one pair per terminal
  int k = 0;
};

struct CutCover {
  VertexSet terminals;
  VertexSet cover;  // disjoint from terminals
};

// Union of the closest minimum (S,T)-vertex cuts of g - R over every way of
// labelling the terminals S, T, R or unused (S, T nonempty). Terminals are
// never cut. More than `cap` terminals raises CapExceeded.
CutCover cut_covering_set(const Graph& g, const VertexSet& x, int cap = 12);

// x must be an OCT of g. For every Y inside x, some minimum OCT of g - Y
// that avoids x lies inside the returned set.
VertexSet relevant_oct_vertices(const Graph& g, const VertexSet& x, int cap = 12);

// Keeps the vertices in `keep` (vertex i of the result is keep[i]) and
// replaces the rest by paths: a 2-path for every even connection through the
// removed part and a 3-path for every odd one, plus a triangle on every kept
// vertex with an odd closed walk through it, each repeated `copies` times.
// g_full - keep must be bipartite.
Graph add_parity_gadgets(const Graph& g_full, const VertexSet& keep, int copies = 1);

struct KernelInstanceInfo {
  VertexSet v_c;          // moved from the independent side to the clique side
  VertexSet v_i;          // moved the other way
  VertexSet terminals;    // X' in ids of the input graph
  int z1 = 0;
  int z2 = 0;
  long long size_bound = 0;  // c * (|X'| + z1 + z2)^2, covers |V(g1)| + |V(g2)|
};

struct KernelResult {
  bool trivially_no = false;  // the approximation already refuted (g, k)
  VertexSet approx_solution;
  double size_constant = 0;   // c in the per-instance size bound
  std::vector<TOCTInstance> instances;
  std::vector<KernelInstanceInfo> info;  // parallel to instances
};

struct KernelOptions {
  int cap = 12;                // terminal cap for the cut cover
  ApproxOptions approx{32, 64};
};

KernelResult build_toct_instances(const Graph& g, int k, const KernelOptions& options = {});

// Tries every split of x into kept-in-g1, deleted and kept-in-g2.
bool toct_decide_brute(const TOCTInstance& h, int cap = 14);

}  // namespace rlpart

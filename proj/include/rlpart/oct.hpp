#pragma once

#include <optional>

#include "rlpart/graph.hpp"

namespace rlpart {

struct OctResult {
  VertexSet deleted;
  Bipartition coloring;  // of g - deleted
};

struct EoctResult {
  EdgeSet deleted;
  Bipartition coloring;  // of g - deleted
};

struct IndependentOct {
  Graph graph;          // original vertices keep their ids; new ones follow
  VertexSet x;          // same ids as the input set
  VertexSet subdivision;  // the inserted path vertices, never to be deleted
};

// Replaces every edge inside x by a path of length three.
IndependentOct make_oct_independent(const Graph& g, const VertexSet& x);

struct Duplicate {
  int original;  // the vertex of x
  int first;     // joined to N(x) on the right side of the base bipartition
  int second;    // joined to N(x) on the left side
};

struct AuxiliaryGraph {
  Graph graph;
  VertexSet x;
  std::vector<Duplicate> duplicate_map;  // parallel to x
  Bipartition base_bipartition;          // of g - x
  std::vector<int> to_original;          // aux id -> id in g
};

// Vertices outside x keep their ids. The first copy of x reuses the id of x,
// the second copy of x[j] gets id n + j.
AuxiliaryGraph build_auxiliary_graph(const Graph& g, const VertexSet& x);

// Minimum OCT of g - banned that avoids x (and `fixed`), if its size is at
// most budget.
std::optional<VertexSet> min_oct_avoiding(const Graph& g, const VertexSet& x, const VertexSet& banned,
                                          int budget, const VertexSet& fixed = {});
std::optional<VertexSet> min_oct_avoiding(const AuxiliaryGraph& aux, const VertexSet& banned, int budget,
                                          const VertexSet& fixed = {});

// Given an OCT s_prime of g, a minimum OCT of g if its size is at most budget.
std::optional<VertexSet> compress_oct(const Graph& g, const VertexSet& s_prime, int budget);

std::optional<OctResult> solve_oct(const Graph& g, int k);
// Exact minimum OCT size of g, or -1 if above cap.
int min_oct_size(const Graph& g, int cap);

std::optional<EoctResult> solve_eoct(const Graph& g, int k);

}  // namespace rlpart

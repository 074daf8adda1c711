#pragma once

#include <optional>

#include "rlpart/graph.hpp"
#include "rlpart/types.hpp"

// Exhaustive reference implementations. Nothing in here calls into the
// solvers; only the Graph type is shared.
namespace rlpart::brute {

struct VertexAnswer {
  int size = 0;
  VertexSet set;
};

struct EdgeAnswer {
  int size = 0;
  EdgeSet set;
};

// Lexicographically first labeling (vertex 0 most significant) with labels
// 0..r-1 independent and r..r+l-1 clique. n <= 12.
std::optional<ICPartition> brute_recognize(const Graph& g, RLParams params, int max_n = 12);
// n <= max_n (default 10). Smallest size first, then lexicographic.
VertexAnswer brute_min_vertex_del(const Graph& g, RLParams params, int max_n = 10);
// m <= 18 unless max_size bounds the search; returns size -1 if nothing of
// size <= max_size works.
EdgeAnswer brute_min_edge_del(const Graph& g, RLParams params, int max_size = -1);
int brute_oct(const Graph& g, int max_n = 10);
int brute_eoct(const Graph& g);  // m <= 21, enough for any 7-vertex graph
// Minimum OCT of g - banned using only vertices outside `avoid`. Returns -1 if
// no such set exists. n <= 12.
int brute_oct_avoiding(const Graph& g, const VertexSet& avoid, const VertexSet& banned);
// All split partitions (V1,V2), V1 given as bitmask. n <= 12.
std::vector<SplitPartition> brute_split_partitions(const Graph& g, RLParams params);
// All (p_i,p_c) bipartitions that admit an IC-partition. n <= 12.
std::vector<ICPartition> brute_ic_partitions(const Graph& g, RLParams params);

}  // namespace rlpart::brute

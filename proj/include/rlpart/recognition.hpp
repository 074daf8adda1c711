#pragma once

#include <optional>
#include <vector>

#include "rlpart/graph.hpp"
#include "rlpart/types.hpp"

namespace rlpart {

// R(l+1, r+1) for r,l <= 2.
int ramsey_bound(RLParams p);

bool verify_ic_partition(const Graph& g, const ICPartition& p, RLParams params);
bool verify_split_partition(const Graph& g, const SplitPartition& p, RLParams params);

// Whether g[set] splits into at most r independent sets / at most l cliques.
bool independent_partitionable(const Graph& g, const VertexSet& set, int r);
bool clique_partitionable(const Graph& g, const VertexSet& set, int l);
// Canonical witness for a bipartition that is known to be feasible; absent
// if it is not.
std::optional<ICPartition> ic_witness(const Graph& g, const VertexSet& p_i, const VertexSet& p_c,
                                      RLParams params);

// g contains vertex v; ab is a split partition of g - v.
std::optional<SplitPartition> compress_split(const Graph& g, int v, const SplitPartition& ab,
                                             RLParams params);
std::optional<SplitPartition> split_partition(const Graph& g, RLParams params);
std::optional<ICPartition> recognize_rl(const Graph& g, RLParams params);
// Every distinct (p_i, p_c) bipartition admitting an IC-partition.
std::vector<ICPartition> enumerate_ic_partitions(const Graph& g, RLParams params, int cap = 24);

}  // namespace rlpart

#pragma once

#include <optional>

#include "rlpart/graph.hpp"
#include "rlpart/types.hpp"

namespace rlpart {

// Every clique of g (including the empty set), sorted by size then
// lexicographically. Requires |E(g - pivot)| <= k, or |E(g)| <= k without a
// pivot; otherwise ContractViolation.
std::vector<VertexSet> enumerate_cliques_sparse(const Graph& g, std::optional<int> pivot, int k);

// g - v - s_prime must be (2,1) with partition `rest` (g ids, v = n - 1).
// Returns a minimum edge set of size <= k turning g into a (2,1)-graph.
std::optional<DeletionResult> compress_edge_21(const Graph& g, const EdgeSet& s_prime, const ICPartition& rest,
                                               int k);
std::optional<DeletionResult> solve_edge_21(const Graph& g, int k);

// Same for (1,2); rest has one independent part and two clique parts.
std::optional<DeletionResult> compress_edge_12(const Graph& g, const EdgeSet& s_prime, const ICPartition& rest,
                                               int k);
std::optional<DeletionResult> solve_edge_12(const Graph& g, int k);

// Dispatches (2,1) and (1,2). (2,2) and anything else is a ContractViolation.
std::optional<DeletionResult> solve_edge(const Graph& g, RLParams params, int k);

}  // namespace rlpart

#pragma once

#include <optional>

#include "rlpart/graph.hpp"
#include "rlpart/types.hpp"

namespace rlpart {

// g - s_prime must be a (2,2)-graph; `rest` is an IC-partition of it in g ids.
std::optional<DeletionResult> compress_vertex_22(const Graph& g, const VertexSet& s_prime,
                                                 const ICPartition& rest, int k);
// Same, recomputing the partition of g - s_prime first.
std::optional<DeletionResult> compress_vertex_22(const Graph& g, const VertexSet& s_prime, int k);

std::optional<DeletionResult> solve_vertex_22(const Graph& g, int k);

// g plus a disjoint clique on n + 3 new vertices (ids n .. 2n+2).
Graph add_disjoint_clique(const Graph& g);

std::optional<DeletionResult> solve_vertex_21(const Graph& g, int k);
std::optional<DeletionResult> solve_vertex_12(const Graph& g, int k);

// Dispatches (2,2), (2,1) and (1,2); anything else is a ContractViolation.
std::optional<DeletionResult> solve_vertex(const Graph& g, RLParams params, int k);

// Maps a (2,2) result on g + disjoint clique back to g (n = original order).
DeletionResult strip_disjoint_clique(const DeletionResult& res, int n);
// Swaps independent and clique parts.
ICPartition swap_roles(const ICPartition& p);

}  // namespace rlpart

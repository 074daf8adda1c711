#pragma once

#include <optional>
#include <set>
#include <vector>

#include "rlpart/graph.hpp"

namespace rlpart::detail {

// A shortest odd cycle of g restricted to vertices with alive[v] != 0.
std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g, const std::vector<char>& alive);

// All inclusion-minimal vertex sets M with M a subset of `deletable`,
// |M| <= max_size and g - M bipartite. Sorted by size, then lexicographically.
std::vector<VertexSet> minimal_octs(const Graph& g, const VertexSet& deletable, int max_size);

}  // namespace rlpart::detail

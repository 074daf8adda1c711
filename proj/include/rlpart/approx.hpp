#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rlpart/graph.hpp"
#include "rlpart/types.hpp"

namespace rlpart {

struct Obstruction {
  VertexSet vertices;  // ids of the graph it was found in
  bool minimal = true;
};

// Returns an OCT of the graph, or nothing. Must not return nothing when an
// OCT of size <= k exists.
struct OctApproximator {
  std::string name;
  std::function<std::optional<VertexSet>(const Graph&, int)> solve;
};

// Exact minimum OCT with budget k.
OctApproximator exact_oct_oracle();

struct ApproxOptions {
  int obstruction_cap = 32;  // larger obstructions raise CapExceeded
  int max_n = 14;            // input order limit for the crossing-guess loop
};

// Absent iff g is (r,l)-split. Otherwise an inclusion-minimal non-split
// induced subgraph, found by trying to drop vertices in descending id order.
std::optional<Obstruction> find_split_obstruction(const Graph& g, RLParams params, int cap = 32);

struct Packing {
  bool too_many = false;
  std::vector<Obstruction> obstructions;  // in g ids, vertex disjoint
  VertexSet rest_vertices;                // g - all obstructions
};

Packing pack_obstructions(const Graph& g, int k, RLParams params, int cap = 32);

struct ApproxResult {
  DeletionResult result;
  int obstruction_count = 0;
  int largest_obstruction = 0;  // 0 when the packing is empty
};

std::optional<ApproxResult> approx_vertex_22(const Graph& g, int k, const OctApproximator& oracle,
                                             const ApproxOptions& options = {});
// k > n is a ContractViolation for these two.
std::optional<ApproxResult> approx_vertex_21(const Graph& g, int k, const OctApproximator& oracle,
                                             const ApproxOptions& options = {});
std::optional<ApproxResult> approx_vertex_12(const Graph& g, int k, const OctApproximator& oracle,
                                             const ApproxOptions& options = {});
std::optional<ApproxResult> approx_vertex(const Graph& g, RLParams params, int k, const OctApproximator& oracle,
                                          const ApproxOptions& options = {});

}  // namespace rlpart

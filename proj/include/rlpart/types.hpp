#pragma once

#include <vector>

#include "rlpart/graph.hpp"

namespace rlpart {

struct RLParams {
  int r = 2;
  int l = 2;
  // Throws ContractViolation unless 0 <= r,l <= 2 and r + l >= 1.
  void validate() const;
  bool operator==(const RLParams&) const = default;
};

// p_i is split into at most r independent sets, p_c into at most l cliques.
// Every part list has exactly r (resp. l) entries; parts may be empty.
struct ICPartition {
  std::vector<VertexSet> independent_parts;
  std::vector<VertexSet> clique_parts;

  VertexSet p_i() const;
  VertexSet p_c() const;
  // Renames every vertex v to host[v] and sorts the parts.
  ICPartition lifted(const VertexSet& host) const;
};

struct SplitPartition {
  VertexSet v1;  // clique number at most r
  VertexSet v2;  // independence number at most l
};

struct DeletionResult {
  VertexSet deleted_vertices;
  EdgeSet deleted_edges;
  ICPartition witness;
  int size = 0;
};

}  // namespace rlpart

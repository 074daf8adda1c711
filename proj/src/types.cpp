#include "rlpart/types.hpp"

#include <algorithm>

namespace rlpart {

void RLParams::validate() const {
  if (r < 0 || r > 2 || l < 0 || l > 2 || r + l < 1)
    throw ContractViolation("(r,l) must satisfy 0 <= r,l <= 2 and r + l >= 1");
}

VertexSet ICPartition::p_i() const {
  VertexSet out;
  for (const auto& part : independent_parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet ICPartition::p_c() const {
  VertexSet out;
  for (const auto& part : clique_parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

ICPartition ICPartition::lifted(const VertexSet& host) const {
  ICPartition out;
  for (const auto& part : independent_parts) out.independent_parts.push_back(lift(part, host));
  for (const auto& part : clique_parts) out.clique_parts.push_back(lift(part, host));
  return out;
}

}  // namespace rlpart

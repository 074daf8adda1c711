#include "rlpart/generate.hpp"

#include <algorithm>

namespace rlpart {

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.n());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

VertexSet relabel(const VertexSet& s, const std::vector<int>& perm) {
  VertexSet out;
  for (int v : s) out.push_back(perm[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PlantedGraph gen_rl_graph(std::uint64_t seed, int n, RLParams params, double cross_edge_prob) {
  params.validate();
  if (n < 0) throw ContractViolation("n must be non-negative");
  Rng rng(seed);
  const int parts = params.r + params.l;
  std::vector<int> part_of(n);
  for (int v = 0, p = 0, filled = 0; v < n; ++v) {
    int size = n / parts + (p < n % parts ? 1 : 0);
    while (filled == size) {
      ++p;
      filled = 0;
      size = n / parts + (p < n % parts ? 1 : 0);
    }
    part_of[v] = p;
    ++filled;
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] == part_of[v]) {
        if (part_of[u] >= params.r) g.add_edge(u, v);
      } else if (rng.bernoulli(cross_edge_prob)) {
        g.add_edge(u, v);
      }
    }
  std::vector<int> perm = all_vertices(n);
  rng.shuffle(perm);
  PlantedGraph out;
  out.graph = relabel(g, perm);
  out.partition.independent_parts.resize(params.r);
  out.partition.clique_parts.resize(params.l);
  for (int v = 0; v < n; ++v) {
    int p = part_of[v];
    auto& part = p < params.r ? out.partition.independent_parts[p] : out.partition.clique_parts[p - params.r];
    part.push_back(perm[v]);
  }
  for (auto& part : out.partition.independent_parts) std::sort(part.begin(), part.end());
  for (auto& part : out.partition.clique_parts) std::sort(part.begin(), part.end());
  return out;
}

NoisyGraph plant_vertex_noise(const Graph& g, std::uint64_t seed, int k) {
  if (k < 0) throw ContractViolation("k must be non-negative");
  NoisyGraph out;
  out.planted_k = k;
  if (k == 0) {
    out.graph = g;
    return out;
  }
  Rng rng(seed);
  const int n = g.n();
  Graph h = g.with_extra_vertices(k);
  for (int a = n; a < n + k; ++a)
    for (int v = 0; v < a; ++v)
      if (rng.bernoulli(0.5)) h.add_edge(a, v);
  std::vector<int> perm = all_vertices(n + k);
  rng.shuffle(perm);
  out.graph = relabel(h, perm);
  VertexSet added;
  for (int a = n; a < n + k; ++a) added.push_back(a);
  out.planted_vertices = relabel(added, perm);
  return out;
}

NoisyGraph plant_edge_noise(const PlantedGraph& pg, std::uint64_t seed, int k) {
  if (k < 0) throw ContractViolation("k must be non-negative");
  const Graph& g = pg.graph;
  EdgeSet candidates;
  for (const auto& part : pg.partition.independent_parts)
    for (size_t i = 0; i < part.size(); ++i)
      for (size_t j = i + 1; j < part.size(); ++j) candidates.push_back(make_edge(part[i], part[j]));
  std::sort(candidates.begin(), candidates.end());
  Rng rng(seed);
  rng.shuffle(candidates);
  candidates.resize(std::min<size_t>(candidates.size(), static_cast<size_t>(k)));
  std::sort(candidates.begin(), candidates.end());
  Graph h = g;
  for (const Edge& e : candidates) h.add_edge(e.first, e.second);
  NoisyGraph out;
  out.graph = std::move(h);
  out.planted_k = static_cast<int>(candidates.size());
  out.planted_edges = candidates;
  return out;
}

Graph random_graph(std::uint64_t seed, int n, double p) {
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

}  // namespace rlpart

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rlpart/graph.hpp"
#include "rlpart/types.hpp"

namespace rlpart {

// std::mt19937_64 seeded with the given value. Doubles use the top 53 bits,
// integers in [0, m) use the raw 64-bit value modulo m. Each generator below
// owns one stream seeded directly with its seed argument.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  int below(int m) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(m)); }
  // Fisher-Yates from the back.
  template <class T>
  void shuffle(std::vector<T>& items) {
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) std::swap(items[i], items[below(i + 1)]);
  }

 private:
  std::mt19937_64 eng_;
};

inline constexpr const char* kGeneratorName = "mt19937_64";

struct PlantedGraph {
  Graph graph;
  ICPartition partition;
};

// r independent parts and l cliques with sizes as even as possible (earlier
// parts get the extra vertices), cross edges with probability p, then vertex
// ids shuffled.
PlantedGraph gen_rl_graph(std::uint64_t seed, int n, RLParams params, double cross_edge_prob);

struct NoisyGraph {
  Graph graph;
  int planted_k = 0;
  VertexSet planted_vertices;  // vertex noise, in ids of `graph`
  EdgeSet planted_edges;       // edge noise: the added edges
};

// Adds k vertices adjacent to every other vertex with probability 1/2, then
// shuffles all ids.
NoisyGraph plant_vertex_noise(const Graph& g, std::uint64_t seed, int k);
// Adds k edges inside independent parts, so deleting them again restores the
// planted partition. Fewer if fewer pairs exist.
NoisyGraph plant_edge_noise(const PlantedGraph& pg, std::uint64_t seed, int k);

// G(n, p) with the same stream conventions.
Graph random_graph(std::uint64_t seed, int n, double p);

}  // namespace rlpart

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "rlpart/brute.hpp"
#include "rlpart/edge_partization.hpp"
#include "rlpart/generate.hpp"
#include "rlpart/recognition.hpp"

using namespace rlpart;

namespace {

void expect_valid(const Graph& g, const DeletionResult& r, RLParams p, int k) {
  EXPECT_EQ(r.size, static_cast<int>(r.deleted_edges.size()));
  EXPECT_LE(r.size, k);
  for (const Edge& e : r.deleted_edges) EXPECT_TRUE(g.adjacent(e.first, e.second));
  Graph rest = g.without_edges(r.deleted_edges);
  EXPECT_TRUE(verify_ic_partition(rest, r.witness, p));
}

}  // namespace

TEST(SparseCliques, Counts) {
  Graph g = fx::disjoint({fx::clique(3), fx::clique(2)});
  auto all = enumerate_cliques_sparse(g, std::nullopt, 4);
  EXPECT_EQ(all.size(), 11u);
  EXPECT_TRUE(all.front().empty());
  EXPECT_EQ(all.back(), (VertexSet{0, 1, 2}));
  EXPECT_EQ(enumerate_cliques_sparse(Graph(3), std::nullopt, 0).size(), 4u);
  EXPECT_EQ(enumerate_cliques_sparse(fx::clique(3), 0, 1).size(), 8u);
}

TEST(SparseCliques, BudgetIsChecked) {
  EXPECT_THROW(enumerate_cliques_sparse(fx::clique(3), std::nullopt, 2), ContractViolation);
  EXPECT_THROW(enumerate_cliques_sparse(fx::clique(4), 0, 2), ContractViolation);
}

TEST(SparseCliques, SortedAndSizeBounded) {
  for (int i = 0; i < 20; ++i) {
    Graph g = random_graph(1300 + i, 9, 0.3);
    auto all = enumerate_cliques_sparse(g, std::nullopt, g.m());
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const VertexSet& a, const VertexSet& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }));
    EXPECT_TRUE(std::adjacent_find(all.begin(), all.end()) == all.end());
    size_t count = 0;
    for (int mask = 0; mask < (1 << g.n()); ++mask) {
      VertexSet s;
      for (int v = 0; v < g.n(); ++v)
        if (mask >> v & 1) s.push_back(v);
      if (is_clique(g, s)) ++count;
    }
    EXPECT_EQ(all.size(), count);
    for (const VertexSet& c : all) EXPECT_LE(c.size(), std::sqrt(8.0 * g.m()) + 1);
  }
}

TEST(Edge21, Examples) {
  auto c3 = solve_edge_21(fx::clique(3), 0);
  ASSERT_TRUE(c3);
  EXPECT_EQ(c3->size, 0);
  auto c5 = solve_edge_21(fx::cycle(5), 0);
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->size, 0);
  Graph k4k4 = fx::copies(fx::clique(4), 2);
  EXPECT_FALSE(solve_edge_21(k4k4, 1));
  auto two = solve_edge_21(k4k4, 2);
  ASSERT_TRUE(two);
  EXPECT_EQ(two->size, 2);
  expect_valid(k4k4, *two, {2, 1}, 2);
}

TEST(Edge12, Examples) {
  auto c4 = solve_edge_12(fx::cycle(4), 0);
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->size, 0);
  auto c5 = solve_edge_12(fx::cycle(5), 0);
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->size, 0);
  Graph k3x3 = fx::copies(fx::clique(3), 3);
  EXPECT_FALSE(solve_edge_12(k3x3, 2));
  auto three = solve_edge_12(k3x3, 3);
  ASSERT_TRUE(three);
  EXPECT_EQ(three->size, 3);
  expect_valid(k3x3, *three, {1, 2}, 3);
}

TEST(Edge, DispatcherRejectsOtherParams) {
  EXPECT_THROW(solve_edge(fx::cycle(5), {2, 2}, 1), ContractViolation);
  EXPECT_THROW(solve_edge(fx::cycle(5), {1, 1}, 1), ContractViolation);
}

TEST(Edge, MatchesBruteForce) {
  for (int i = 0; i < 80; ++i) {
    Graph g = random_graph(1400 + i, 3 + i % 4, i % 2 ? 0.4 : 0.7);
    for (RLParams p : {RLParams{2, 1}, RLParams{1, 2}}) {
      const int opt = brute::brute_min_edge_del(g, p).size;
      auto r = solve_edge(g, p, g.m());
      ASSERT_TRUE(r);
      EXPECT_EQ(r->size, opt) << "seed " << i << " r=" << p.r << " l=" << p.l;
      expect_valid(g, *r, p, g.m());
      if (opt > 0) EXPECT_FALSE(solve_edge(g, p, opt - 1));
    }
  }
}

TEST(Edge, PlantedNoiseIsRecovered) {
  for (int i = 0; i < 10; ++i) {
    const RLParams p = i % 2 ? RLParams{1, 2} : RLParams{2, 1};
    PlantedGraph pg = gen_rl_graph(1500 + i, 8, p, 0.4);
    NoisyGraph noisy = plant_edge_noise(pg, 1600 + i, 2);
    auto r = solve_edge(noisy.graph, p, noisy.planted_k);
    ASSERT_TRUE(r);
    expect_valid(noisy.graph, *r, p, noisy.planted_k);
  }
}

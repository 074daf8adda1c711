#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rlpart/brute.hpp"
#include "rlpart/generate.hpp"
#include "rlpart/recognition.hpp"
#include "rlpart/vertex_partization.hpp"

using namespace rlpart;

namespace {

const Graph kC5 = fx::cycle(5);

void expect_valid(const Graph& g, const DeletionResult& r, RLParams p, int k) {
  EXPECT_EQ(r.size, static_cast<int>(r.deleted_vertices.size()));
  EXPECT_LE(r.size, k);
  VertexSet rest = set_minus(all_vertices(g.n()), r.deleted_vertices);
  ICPartition local = r.witness;
  // The witness uses ids of g; check it against the residual graph by
  // relabelling through the kept vertex list.
  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < rest.size(); ++i) pos[rest[i]] = static_cast<int>(i);
  auto relabel = [&](std::vector<VertexSet>& parts) {
    for (VertexSet& part : parts)
      for (int& v : part) {
        ASSERT_GE(pos[v], 0) << "witness uses a deleted vertex";
        v = pos[v];
      }
  };
  relabel(local.independent_parts);
  relabel(local.clique_parts);
  EXPECT_TRUE(verify_ic_partition(g.induced(rest), local, p));
}

}  // namespace

TEST(Vertex22, Examples) {
  auto c5 = solve_vertex_22(kC5, 0);
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->size, 0);
  Graph three = fx::copies(kC5, 3);
  EXPECT_FALSE(solve_vertex_22(three, 0));
  auto one = solve_vertex_22(three, 1);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->size, 1);
  expect_valid(three, *one, {2, 2}, 1);
}

TEST(Vertex22, CompressFromSingleVertex) {
  Graph g = fx::disjoint({fx::clique(4), kC5});
  auto r = compress_vertex_22(g, {0}, 0);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->size, 0);
  expect_valid(g, *r, {2, 2}, 0);
}

TEST(Vertex22, CompressRejectsBadInput) {
  EXPECT_THROW(compress_vertex_22(fx::copies(kC5, 3), VertexSet{}, 1), ContractViolation);
}

TEST(Vertex21, Examples) {
  auto c5 = solve_vertex_21(kC5, 0);
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->size, 0);
  auto two_k2 = solve_vertex_21(fx::copies(fx::clique(2), 2), 0);
  ASSERT_TRUE(two_k2);
  EXPECT_EQ(two_k2->size, 0);
  Graph g = fx::disjoint({fx::clique(4), kC5, kC5});
  const int opt = brute::brute_min_vertex_del(g, {2, 1}, 14).size;
  EXPECT_FALSE(solve_vertex_21(g, opt - 1));
  auto r = solve_vertex_21(g, opt);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->size, opt);
  expect_valid(g, *r, {2, 1}, opt);
  EXPECT_THROW(solve_vertex_21(kC5, 6), ContractViolation);
}

TEST(Vertex12, Examples) {
  auto k5 = solve_vertex_12(fx::clique(5), 0);
  ASSERT_TRUE(k5);
  EXPECT_EQ(k5->size, 0);
  auto c5 = solve_vertex_12(kC5, 0);
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->size, 0);
  Graph g = fx::copies(fx::clique(3), 3);
  const int opt = brute::brute_min_vertex_del(g, {1, 2}).size;
  for (int k = 0; k <= 2; ++k) {
    auto r = solve_vertex_12(g, k);
    EXPECT_EQ(r.has_value(), opt <= k);
    if (r) {
      EXPECT_EQ(r->size, opt);
      expect_valid(g, *r, {1, 2}, k);
    }
  }
  EXPECT_THROW(solve_vertex_12(kC5, 6), ContractViolation);
}

TEST(Vertex, DispatcherRejectsOtherParams) {
  EXPECT_THROW(solve_vertex(kC5, {1, 1}, 1), ContractViolation);
  EXPECT_THROW(solve_vertex(kC5, {2, 0}, 1), ContractViolation);
}

TEST(DisjointClique, Sizes) {
  Graph one = add_disjoint_clique(Graph(1));
  EXPECT_EQ(one.n(), 5);
  EXPECT_EQ(one.m(), 6);
  Graph c5 = add_disjoint_clique(kC5);
  EXPECT_EQ(c5.n(), 13);
  EXPECT_EQ(c5.m(), 5 + 28);
  Graph k2 = add_disjoint_clique(fx::clique(2));
  EXPECT_EQ(k2.n(), 7);
  EXPECT_EQ(k2.m(), 1 + 10);
  EXPECT_TRUE(c5.induced({0, 1, 2, 3, 4}) == kC5);
}

TEST(SwapRoles, Swaps) {
  ICPartition p{{{0}, {1}}, {{2, 3}, {}}};
  ICPartition s = swap_roles(p);
  EXPECT_EQ(s.independent_parts, p.clique_parts);
  EXPECT_EQ(s.clique_parts, p.independent_parts);
}

TEST(Vertex, MatchesBruteForce) {
  const RLParams params[] = {{2, 2}, {2, 1}, {1, 2}};
  const double probs[] = {0.2, 0.5, 0.8};
  for (int i = 0; i < 60; ++i) {
    Graph g = random_graph(1100 + i, 3 + i % 6, probs[i % 3]);
    for (RLParams p : params) {
      const int opt = brute::brute_min_vertex_del(g, p).size;
      auto r = solve_vertex(g, p, g.n());
      ASSERT_TRUE(r);
      EXPECT_EQ(r->size, opt) << "seed " << i << " r=" << p.r << " l=" << p.l;
      expect_valid(g, *r, p, g.n());
      if (opt > 0) EXPECT_FALSE(solve_vertex(g, p, opt - 1));
    }
  }
}

TEST(Vertex, ComplementDuality) {
  for (int i = 0; i < 20; ++i) {
    Graph g = random_graph(1200 + i, 7, 0.5);
    auto a = solve_vertex_12(g, g.n());
    auto b = solve_vertex_21(complement(g), g.n());
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->size, b->size);
  }
}

TEST(Vertex, MonotoneInK) {
  Graph g = fx::copies(kC5, 3);
  bool seen = false;
  for (int k = 0; k <= 3; ++k) {
    bool now = solve_vertex_22(g, k).has_value();
    EXPECT_TRUE(!seen || now);
    seen = now;
  }
  EXPECT_TRUE(seen);
}

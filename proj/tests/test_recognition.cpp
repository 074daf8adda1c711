#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "rlpart/brute.hpp"
#include "rlpart/generate.hpp"
#include "rlpart/recognition.hpp"

using namespace rlpart;

namespace {
const RLParams kAll[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {2, 0}, {0, 2}, {1, 0}, {0, 1}};
}

TEST(Ramsey, Values) {
  EXPECT_EQ(ramsey_bound({1, 1}), 2);
  EXPECT_EQ(ramsey_bound({2, 1}), 3);
  EXPECT_EQ(ramsey_bound({1, 2}), 3);
  EXPECT_EQ(ramsey_bound({2, 2}), 6);
  EXPECT_EQ(ramsey_bound({2, 0}), 1);
  EXPECT_EQ(ramsey_bound({0, 1}), 1);
  EXPECT_THROW(ramsey_bound({3, 1}), ContractViolation);
  EXPECT_THROW(ramsey_bound({0, 0}), ContractViolation);
}

TEST(Verify, IcPartition) {
  Graph c5 = fx::cycle(5);
  ICPartition good{{{0, 2}, {1, 3}}, {{4}}};
  EXPECT_TRUE(verify_ic_partition(c5, good, {2, 1}));
  ICPartition bad{{{0, 1}, {2, 3}}, {{4}}};
  EXPECT_FALSE(verify_ic_partition(c5, bad, {2, 1}));
  ICPartition missing{{{0, 2}, {1, 3}}, {{}}};
  EXPECT_FALSE(verify_ic_partition(c5, missing, {2, 1}));
  ICPartition too_many_parts{{{0, 2}, {1, 3}, {4}}, {{}}};
  EXPECT_FALSE(verify_ic_partition(c5, too_many_parts, {2, 1}));
}

TEST(Verify, SplitPartition) {
  Graph c5 = fx::cycle(5);
  EXPECT_TRUE(verify_split_partition(c5, {{0, 1, 2, 3, 4}, {}}, {2, 2}));
  EXPECT_FALSE(verify_split_partition(fx::clique(3), {{0, 1, 2}, {}}, {2, 2}));
  EXPECT_TRUE(verify_split_partition(fx::clique(3), {{0, 1}, {2}}, {2, 2}));
  EXPECT_FALSE(verify_split_partition(Graph(3), {{}, {0, 1, 2}}, {2, 2}));
}

TEST(Partitionable, Examples) {
  EXPECT_TRUE(independent_partitionable(fx::cycle(4), {0, 1, 2, 3}, 2));
  EXPECT_FALSE(independent_partitionable(fx::cycle(5), {0, 1, 2, 3, 4}, 2));
  EXPECT_TRUE(independent_partitionable(fx::cycle(5), {0, 1, 2, 3}, 2));
  EXPECT_TRUE(clique_partitionable(fx::cycle(4), {0, 1, 2, 3}, 2));
  EXPECT_FALSE(clique_partitionable(Graph(3), {0, 1, 2}, 2));
  EXPECT_TRUE(independent_partitionable(fx::clique(5), {}, 0));
}

TEST(Witness, CanonicalAndChecked) {
  Graph c5 = fx::cycle(5);
  auto w = ic_witness(c5, {0, 1, 2, 3}, {4}, {2, 1});
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_ic_partition(c5, *w, {2, 1}));
  EXPECT_FALSE(ic_witness(c5, {0, 1, 2, 3, 4}, {}, {2, 1}));
}

TEST(CompressSplit, Examples) {
  // Path 0-1-2 split as independent {0,2} and clique {1}.
  const SplitPartition p3{{0, 2}, {1}};
  Graph star = fx::edges(4, {{0, 1}, {1, 2}, {1, 3}});
  auto r = compress_split(star, 3, p3, {1, 1});
  ASSERT_TRUE(r);
  EXPECT_TRUE(verify_split_partition(star, *r, {1, 1}));
  Graph c4 = fx::edges(4, {{0, 1}, {1, 2}, {3, 0}, {3, 2}});
  EXPECT_FALSE(compress_split(c4, 3, p3, {1, 1}));

  // A wheel on a four-cycle has clique number three.
  Graph wheel = fx::edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
  auto w = compress_split(wheel, 4, {{0, 1, 2, 3}, {}}, {2, 2});
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_split_partition(wheel, *w, {2, 2}));
}

TEST(SplitPartition, Examples) {
  EXPECT_FALSE(split_partition(fx::copies(fx::clique(2), 2), {1, 1}));
  EXPECT_FALSE(split_partition(fx::cycle(5), {1, 1}));
  auto c5 = split_partition(fx::cycle(5), {2, 2});
  ASSERT_TRUE(c5);
  EXPECT_TRUE(verify_split_partition(fx::cycle(5), *c5, {2, 2}));
  auto p3 = split_partition(fx::path(3), {1, 1});
  ASSERT_TRUE(p3);
  EXPECT_TRUE(verify_split_partition(fx::path(3), *p3, {1, 1}));
}

TEST(SplitPartition, MatchesBruteForce) {
  for (int i = 0; i < 60; ++i) {
    Graph g = random_graph(700 + i, 3 + i % 7, 0.5);
    for (RLParams p : {RLParams{1, 1}, RLParams{2, 1}, RLParams{1, 2}, RLParams{2, 2}}) {
      bool expect = !brute::brute_split_partitions(g, p).empty();
      auto got = split_partition(g, p);
      EXPECT_EQ(got.has_value(), expect) << "seed " << i;
      if (got) EXPECT_TRUE(verify_split_partition(g, *got, p));
    }
  }
}

TEST(Recognize, Examples) {
  Graph c5 = fx::cycle(5);
  EXPECT_TRUE(recognize_rl(c5, {2, 1}));
  EXPECT_TRUE(recognize_rl(c5, {1, 2}));
  EXPECT_FALSE(recognize_rl(c5, {1, 1}));
  EXPECT_FALSE(recognize_rl(c5, {2, 0}));
  Graph k4c5 = fx::disjoint({fx::clique(4), c5});
  auto w = recognize_rl(k4c5, {2, 2});
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_ic_partition(k4c5, *w, {2, 2}));
  EXPECT_FALSE(recognize_rl(k4c5, {2, 1}));
  EXPECT_FALSE(recognize_rl(fx::copies(c5, 3), {2, 2}));
  auto empty = recognize_rl(Graph(0), {2, 2});
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty->independent_parts.size(), 2u);
  EXPECT_EQ(empty->clique_parts.size(), 2u);
}

TEST(Recognize, MatchesBruteForce) {
  for (int i = 0; i < 120; ++i) {
    Graph g = random_graph(800 + i, 1 + i % 8, i % 3 == 0 ? 0.3 : 0.55);
    for (RLParams p : kAll) {
      bool expect = brute::brute_recognize(g, p).has_value();
      auto got = recognize_rl(g, p);
      ASSERT_EQ(got.has_value(), expect) << "seed " << i << " r=" << p.r << " l=" << p.l;
      if (got) {
        EXPECT_TRUE(verify_ic_partition(g, *got, p));
        EXPECT_EQ(static_cast<int>(got->independent_parts.size()), p.r);
        EXPECT_EQ(static_cast<int>(got->clique_parts.size()), p.l);
      }
    }
  }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_ic_partitions(fx::clique(2), {2, 2}).size(), 4u);
  EXPECT_EQ(enumerate_ic_partitions(Graph(1), {2, 2}).size(), 2u);
  EXPECT_TRUE(enumerate_ic_partitions(fx::cycle(5), {2, 0}).empty());
}

TEST(Enumerate, MatchesBruteForceAsBipartitions) {
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(900 + i, 2 + i % 7, 0.5);
    for (RLParams p : {RLParams{2, 1}, RLParams{1, 2}, RLParams{2, 2}}) {
      std::set<VertexSet> expect, got;
      for (const ICPartition& q : brute::brute_ic_partitions(g, p)) expect.insert(q.p_i());
      for (const ICPartition& q : enumerate_ic_partitions(g, p)) {
        EXPECT_TRUE(verify_ic_partition(g, q, p));
        EXPECT_TRUE(got.insert(q.p_i()).second) << "duplicate bipartition";
      }
      EXPECT_EQ(got, expect) << "seed " << i;
    }
  }
}

TEST(Enumerate, SidesIntersectInFewVertices) {
  // An independent part and a clique share at most one vertex.
  for (int i = 0; i < 30; ++i) {
    Graph g = random_graph(1000 + i, 8, 0.5);
    const RLParams p{2, 2};
    auto all = enumerate_ic_partitions(g, p);
    for (const auto& a : all)
      for (const auto& b : all)
        EXPECT_LE(static_cast<int>(set_intersect(a.p_i(), b.p_c()).size()), p.r * p.l);
  }
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_THROW(enumerate_ic_partitions(Graph(30), {2, 2}), CapExceeded);
}

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "rlpart/brute.hpp"
#include "rlpart/generate.hpp"
#include "rlpart/kernel.hpp"
#include "rlpart/oct.hpp"

using namespace rlpart;

namespace {

// Minimum TOCT cost over all pairs of deletion sets, straight from the
// definition: every terminal must disappear from at least one side and
// costs one when it disappears from both.
int toct_exhaustive(const TOCTInstance& h) {
  const int n1 = h.g1.n(), n2 = h.g2.n();
  int best = -1;
  for (int m1 = 0; m1 < (1 << n1); ++m1) {
    VertexSet s1;
    for (int v = 0; v < n1; ++v)
      if (m1 >> v & 1) s1.push_back(v);
    if (!is_bipartite(h.g1.without(s1))) continue;
    for (int m2 = 0; m2 < (1 << n2); ++m2) {
      VertexSet s2;
      for (int v = 0; v < n2; ++v)
        if (m2 >> v & 1) s2.push_back(v);
      int cost = static_cast<int>(set_minus(s1, h.x).size() + set_minus(s2, h.y).size());
      bool ok = true;
      for (auto [a, b] : h.phi) {
        bool gone1 = m1 >> a & 1, gone2 = m2 >> b & 1;
        if (!gone1 && !gone2) ok = false;
        if (gone1 && gone2) ++cost;
      }
      if (!ok || !is_bipartite(h.g2.without(s2))) continue;
      if (best < 0 || cost < best) best = cost;
    }
  }
  return best;
}

TOCTInstance identity_instance(Graph g1, Graph g2, VertexSet x, int k) {
  TOCTInstance h{std::move(g1), std::move(g2), x, x, {}, k};
  for (int v : x) h.phi.emplace_back(v, v);
  return h;
}

}  // namespace

TEST(CutCover, Examples) {
  EXPECT_EQ(cut_covering_set(fx::path(3), {0, 2}).cover, (VertexSet{1}));
  EXPECT_EQ(cut_covering_set(fx::star(3), {1, 2, 3}).cover, (VertexSet{0}));
  EXPECT_TRUE(cut_covering_set(fx::cycle(5), {}).cover.empty());
  EXPECT_THROW(cut_covering_set(Graph(14), all_vertices(13)), CapExceeded);
}

TEST(CutCover, ContainsAMinimumCutForEveryLabelling) {
  for (int i = 0; i < 15; ++i) {
    Graph g = random_graph(2000 + i, 8, 0.35);
    const VertexSet x{0, 1, 2};
    CutCover cc = cut_covering_set(g, x);
    EXPECT_TRUE(set_intersect(cc.cover, x).empty());
    // Every labelling of x into S, T, R, unused.
    for (int code = 0; code < 64; ++code) {
      VertexSet s, t, r;
      int c = code;
      for (int j = 0; j < 3; ++j, c /= 4) {
        int lab = c % 4;
        if (lab == 0) s.push_back(x[j]);
        if (lab == 1) t.push_back(x[j]);
        if (lab == 2) r.push_back(x[j]);
      }
      if (s.empty() || t.empty()) continue;
      VertexCut any = min_vertex_cut(g, s, t, r);
      if (!any.ok()) continue;
      VertexSet outside = set_minus(set_minus(all_vertices(g.n()), cc.cover), x);
      VertexCut inside = min_vertex_cut(g, s, t, r, outside);
      ASSERT_TRUE(inside.ok()) << "seed " << i << " code " << code;
      EXPECT_EQ(inside.cut.size(), any.cut.size());
    }
  }
}

TEST(RelevantVertices, TriangleAndBipartite) {
  VertexSet z = relevant_oct_vertices(fx::clique(3), {0});
  EXPECT_FALSE(z.empty());
  EXPECT_FALSE(set_contains(z, 0));
  EXPECT_THROW(relevant_oct_vertices(fx::cycle(5), {}), ContractViolation);
  EXPECT_NO_THROW(relevant_oct_vertices(fx::cycle(6), {0}));
}

TEST(RelevantVertices, KeepOptimalSizeForEverySubset) {
  for (int i = 0; i < 25; ++i) {
    Graph g = random_graph(2100 + i, 6 + i % 4, 0.45);
    VertexSet x = solve_oct(g, g.n())->deleted;
    if (x.size() > 4) continue;
    VertexSet z = relevant_oct_vertices(g, x);
    VertexSet forbidden = set_minus(all_vertices(g.n()), z);
    for (int mask = 0; mask < (1 << x.size()); ++mask) {
      VertexSet y;
      for (size_t j = 0; j < x.size(); ++j)
        if (mask >> j & 1) y.push_back(x[j]);
      EXPECT_EQ(brute::brute_oct_avoiding(g, set_union(x, forbidden), y), brute::brute_oct_avoiding(g, x, y))
          << "seed " << i << " mask " << mask;
    }
  }
}

TEST(Gadgets, Examples) {
  // Interior vertex 2 joined to both kept vertices: one 2-path.
  Graph even = add_parity_gadgets(fx::edges(3, {{0, 2}, {1, 2}}), {0, 1});
  EXPECT_EQ(even.n(), 3);
  EXPECT_EQ(even.m(), 2);
  EXPECT_FALSE(even.adjacent(0, 1));
  // Interior edge 2-3 between them: one 3-path.
  Graph odd = add_parity_gadgets(fx::edges(4, {{0, 2}, {2, 3}, {3, 1}}), {0, 1});
  EXPECT_EQ(odd.n(), 4);
  EXPECT_EQ(odd.m(), 3);
  EXPECT_EQ(odd.degree(0), 1);
  EXPECT_EQ(odd.degree(1), 1);
  Graph none = add_parity_gadgets(fx::edges(3, {{0, 1}}), {0, 1});
  EXPECT_EQ(none.n(), 2);
  EXPECT_EQ(none.m(), 1);
  Graph twice = add_parity_gadgets(fx::edges(3, {{0, 2}, {1, 2}}), {0, 1}, 2);
  EXPECT_EQ(twice.n(), 4);
  EXPECT_EQ(twice.m(), 4);
  EXPECT_THROW(add_parity_gadgets(fx::cycle(5), {}), ContractViolation);
}

TEST(Gadgets, OddWalkThroughInterior) {
  // Kept vertex 0 sees both ends of the interior edge 1-2.
  Graph tri = add_parity_gadgets(fx::clique(3), {0});
  EXPECT_FALSE(is_bipartite(tri));
}

TEST(Gadgets, PreserveAvoidingOctSizes) {
  for (int i = 0; i < 40; ++i) {
    const int n = 5 + i % 4;
    Graph g = random_graph(2200 + i, n, 0.3 + 0.1 * (i % 5));
    VertexSet x = solve_oct(g, n)->deleted;
    for (int v = 0; v < n && x.size() < 4; v += 3) x = set_union(x, {v});
    VertexSet keep = set_union(x, relevant_oct_vertices(g, x));
    Graph star = add_parity_gadgets(g, keep, n + 1);
    VertexSet xs;
    for (int v : x) xs.push_back(static_cast<int>(std::lower_bound(keep.begin(), keep.end(), v) - keep.begin()));
    IndependentOct orig = make_oct_independent(g, x);
    IndependentOct red = make_oct_independent(star, xs);
    for (int mask = 0; mask < (1 << x.size()); ++mask) {
      VertexSet y, ys;
      for (size_t j = 0; j < x.size(); ++j)
        if (mask >> j & 1) {
          y.push_back(x[j]);
          ys.push_back(xs[j]);
        }
      auto a = min_oct_avoiding(orig.graph, x, y, n, orig.subdivision);
      auto b = min_oct_avoiding(red.graph, xs, ys, n, red.subdivision);
      EXPECT_EQ(a ? static_cast<int>(a->size()) : -1, b ? static_cast<int>(b->size()) : -1)
          << "seed " << i << " mask " << mask;
    }
  }
}

TEST(Toct, Examples) {
  EXPECT_TRUE(toct_decide_brute(identity_instance(fx::cycle(4), Graph(2), {}, 0)));
  EXPECT_FALSE(toct_decide_brute(identity_instance(fx::cycle(5), Graph(0), {}, 0)));
  EXPECT_TRUE(toct_decide_brute(identity_instance(fx::cycle(5), Graph(0), {}, 1)));
  // The terminal must be dropped from one side, and each triangle runs
  // through it; dropping it from one side leaves the other one intact.
  Graph tri = fx::clique(3);
  EXPECT_FALSE(toct_decide_brute(identity_instance(tri, tri, {0}, 0)));
  EXPECT_TRUE(toct_decide_brute(identity_instance(tri, tri, {0}, 1)));
}

TEST(Toct, MatchesExhaustiveSearch) {
  for (int i = 0; i < 40; ++i) {
    Graph g1 = random_graph(2300 + i, 4 + i % 3, 0.5);
    Graph g2 = random_graph(2400 + i, 4 + (i / 3) % 3, 0.5);
    VertexSet x = i % 2 ? VertexSet{0, 1} : VertexSet{0, 1, 2};
    const int opt = toct_exhaustive(identity_instance(g1, g2, x, 0));
    ASSERT_GE(opt, 0);
    EXPECT_TRUE(toct_decide_brute(identity_instance(g1, g2, x, opt))) << "seed " << i;
    if (opt > 0) EXPECT_FALSE(toct_decide_brute(identity_instance(g1, g2, x, opt - 1))) << "seed " << i;
  }
}

TEST(Kernel, ThreeFiveCycles) {
  Graph g = fx::copies(fx::cycle(5), 3);
  KernelResult no = build_toct_instances(g, 0);
  bool any = false;
  for (const TOCTInstance& h : no.instances) any = any || toct_decide_brute(h);
  EXPECT_FALSE(any);
  KernelResult yes = build_toct_instances(g, 1);
  EXPECT_FALSE(yes.trivially_no);
  ASSERT_FALSE(yes.instances.empty());
  any = false;
  for (const TOCTInstance& h : yes.instances) any = any || toct_decide_brute(h);
  EXPECT_TRUE(any);
}

TEST(Kernel, RecognizedGraphHasYesInstance) {
  Graph g = fx::disjoint({fx::clique(4), fx::cycle(5)});
  KernelResult r = build_toct_instances(g, 0);
  ASSERT_FALSE(r.trivially_no);
  EXPECT_TRUE(std::any_of(r.instances.begin(), r.instances.end(),
                          [](const TOCTInstance& h) { return toct_decide_brute(h); }));
}

TEST(Kernel, OrMatchesBruteForceAndSizesAreBounded) {
  for (int i = 0; i < 8; ++i) {
    const int n = 6 + i % 3, k = i % 3;
    Graph g = random_graph(2500 + i, n, 0.3 + 0.2 * (i % 3));
    const bool truth = brute::brute_min_vertex_del(g, {2, 2}).size <= k;
    KernelResult r = build_toct_instances(g, k);
    ASSERT_EQ(r.info.size(), r.instances.size());
    bool any = false;
    for (size_t j = 0; j < r.instances.size(); ++j) {
      const TOCTInstance& h = r.instances[j];
      EXPECT_EQ(h.x.size(), h.y.size());
      EXPECT_EQ(h.phi.size(), h.x.size());
      EXPECT_LE(h.g1.n() + h.g2.n(), r.info[j].size_bound);
      if (!any) any = toct_decide_brute(h);
    }
    EXPECT_EQ(any, truth) << "seed " << i;
  }
}

#include "rlpart/kernel.hpp"

#include <algorithm>

#include "rlpart/oct.hpp"
#include "rlpart/parallel.hpp"
#include "rlpart/recognition.hpp"

namespace rlpart {

namespace {

std::vector<VertexSet> subsets_upto(const VertexSet& items, int max_size) {
  std::vector<VertexSet> out;
  int n = static_cast<int>(items.size());
  max_size = std::min(max_size, n);
  for (int s = 0; s <= max_size; ++s) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      VertexSet sub;
      for (int i : idx) sub.push_back(items[i]);
      out.push_back(std::move(sub));
      int i = s - 1;
      while (i >= 0 && idx[i] == n - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

VertexSet positions_in(const VertexSet& items, const VertexSet& host) {
  VertexSet out;
  for (int v : items) out.push_back(static_cast<int>(std::lower_bound(host.begin(), host.end(), v) - host.begin()));
  return out;
}

// Minimum OCTs avoiding x, with the subdivision vertices kept out of every
// cut. When x is not an OCT, an OCT `extra` of g - x joins the terminals and
// each of its vertices is either deleted outright or kept.
struct AvoidingSolver {
  VertexSet extra;
  IndependentOct ind;
  AuxiliaryGraph aux;

  AvoidingSolver(const Graph& g, const VertexSet& x)
      : extra(extra_terminals(g, x)),
        ind(make_oct_independent(g, set_union(x, extra))),
        aux(build_auxiliary_graph(ind.graph, ind.x)) {}

  static VertexSet extra_terminals(const Graph& g, const VertexSet& x) {
    Graph rest = g.without(x);
    if (is_bipartite(rest)) return {};
    VertexSet kept = set_minus(all_vertices(g.n()), x);
    return lift(solve_oct(rest, rest.n())->deleted, kept);
  }

  std::optional<VertexSet> solve(const VertexSet& banned, int budget) const {
    if (extra.empty()) return min_oct_avoiding(aux, banned, budget, ind.subdivision);
    std::optional<VertexSet> best;
    const int e = static_cast<int>(extra.size());
    for (int mask = 0; mask < (1 << e); ++mask) {
      VertexSet d;
      for (int j = 0; j < e; ++j)
        if (mask >> j & 1) d.push_back(extra[j]);
      VertexSet d_new = set_minus(d, banned);
      int room = budget - static_cast<int>(d_new.size());
      if (best) room = std::min(room, static_cast<int>(best->size() - d_new.size()) - 1);
      if (room < 0) continue;
      auto z = min_oct_avoiding(aux, set_union(banned, d), room, ind.subdivision);
      if (z) best = set_union(*z, d_new);
    }
    return best;
  }
};

}  // namespace

CutCover cut_covering_set(const Graph& g, const VertexSet& x, int cap) {
  if (static_cast<int>(x.size()) > cap) throw CapExceeded("cut_cover.terminals", cap, static_cast<long long>(x.size()));
  CutCover out;
  out.terminals = x;
  const int t = static_cast<int>(x.size());
  // label per terminal: 0 S, 1 T, 2 R, 3 unused
  std::vector<int> label(t, 0);
  VertexSet cover;
  auto visit = [&]() {
    VertexSet s, tt, r, unused;
    for (int i = 0; i < t; ++i) {
      if (label[i] == 0) s.push_back(x[i]);
      if (label[i] == 1) tt.push_back(x[i]);
      if (label[i] == 2) r.push_back(x[i]);
      if (label[i] == 3) unused.push_back(x[i]);
    }
    if (s.empty() || tt.empty()) return;
    if (tt.front() < s.front()) return;  // (T,S) gives the same cut family
    VertexCut cut = min_vertex_cut(g, s, tt, r, unused);
    if (cut.ok()) cover = set_union(cover, cut.cut);
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == t) {
      visit();
      return;
    }
    for (int l = 0; l < 4; ++l) {
      label[i] = l;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  out.cover = std::move(cover);
  return out;
}

VertexSet relevant_oct_vertices(const Graph& g, const VertexSet& x, int cap) {
  if (static_cast<int>(x.size()) > cap) throw CapExceeded("relevant.terminals", cap, static_cast<long long>(x.size()));
  if (!is_bipartite(g.without(x))) throw ContractViolation("relevant_oct_vertices: x is not an OCT");
  AvoidingSolver solver(g, x);
  const AuxiliaryGraph& aux = solver.aux;
  VertexSet fixed = solver.ind.subdivision;

  // Only labellings that come from an actual split of x \ Y into two sides
  // can carry a minimum OCT, so the terminal pairs are labelled together:
  // both removed, or one copy on each side. Edges inside x force opposite
  // sides, which prunes most labellings.
  const int t = static_cast<int>(x.size());
  std::vector<int> side(t, -1);  // -1 removed, 0 first copy with S, 1 swapped
  VertexSet cover;
  auto visit = [&]() {
    VertexSet s, tt, r;
    for (int i = 0; i < t; ++i) {
      const Duplicate& d = aux.duplicate_map[i];
      if (side[i] == -1) {
        r.push_back(d.first);
        r.push_back(d.second);
      } else {
        s.push_back(side[i] == 0 ? d.first : d.second);
        tt.push_back(side[i] == 0 ? d.second : d.first);
      }
    }
    if (s.empty()) return;
    std::sort(s.begin(), s.end());
    std::sort(tt.begin(), tt.end());
    std::sort(r.begin(), r.end());
    VertexCut cut = min_vertex_cut(aux.graph, s, tt, r, fixed);
    if (cut.ok()) cover = set_union(cover, cut.cut);
  };
  auto rec = [&](auto&& self, int i, bool any_kept) -> void {
    if (i == t) {
      visit();
      return;
    }
    side[i] = -1;
    self(self, i + 1, any_kept);
    for (int s = 0; s < 2; ++s) {
      if (!any_kept && s == 1) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (side[j] == s && g.adjacent(x[i], x[j])) ok = false;
      if (!ok) continue;
      side[i] = s;
      self(self, i + 1, true);
    }
    side[i] = -1;
  };
  rec(rec, 0, false);
  VertexSet out;
  for (int v : cover) {
    int orig = aux.to_original[v];
    if (orig < g.n() && !set_contains(x, orig)) out.push_back(orig);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph add_parity_gadgets(const Graph& g_full, const VertexSet& keep, int copies) {
  VertexSet interior = set_minus(all_vertices(g_full.n()), keep);
  Graph inner = g_full.induced(interior);
  // Component and color of each interior vertex.
  std::vector<int> comp(inner.n(), -1), color(inner.n(), -1);
  int comps = 0;
  for (int s = 0; s < inner.n(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = comps;
    color[s] = 0;
    std::vector<int> queue{s};
    for (size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int w : inner.neighbors(u)) {
        if (comp[w] == -1) {
          comp[w] = comps;
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          throw ContractViolation("add_parity_gadgets: interior is not bipartite");
        }
      }
    }
    ++comps;
  }
  const int kk = static_cast<int>(keep.size());
  // touch[i][c] bit 0/1: keep[i] has an interior neighbor of color 0/1 in component c
  std::vector<std::vector<char>> touch(kk, std::vector<char>(comps, 0));
  for (int i = 0; i < kk; ++i)
    for (int w : g_full.neighbors(keep[i])) {
      auto it = std::lower_bound(interior.begin(), interior.end(), w);
      if (it == interior.end() || *it != w) continue;
      int li = static_cast<int>(it - interior.begin());
      touch[i][comp[li]] |= static_cast<char>(1 << color[li]);
    }
  std::vector<std::pair<int, int>> even, odd;
  // An odd closed walk from a kept vertex back to itself becomes a triangle.
  std::vector<int> odd_loop;
  for (int i = 0; i < kk; ++i)
    for (int c = 0; c < comps; ++c)
      if (touch[i][c] == 3) {
        odd_loop.push_back(i);
        break;
      }
  for (int i = 0; i < kk; ++i)
    for (int j = i + 1; j < kk; ++j) {
      bool e = false, o = false;
      for (int c = 0; c < comps; ++c) {
        int a = touch[i][c], b = touch[j][c];
        if (a & b) e = true;
        if (((a & 1) && (b & 2)) || ((a & 2) && (b & 1))) o = true;
      }
      if (e) even.emplace_back(i, j);
      if (o) odd.emplace_back(i, j);
    }
  int extra = copies * static_cast<int>(even.size() + 2 * odd.size() + 2 * odd_loop.size());
  Graph out = g_full.induced(keep).with_extra_vertices(extra);
  int next = kk;
  for (auto [i, j] : even)
    for (int c = 0; c < copies; ++c) {
      int p = next++;
      out.add_edge(i, p);
      out.add_edge(p, j);
    }
  for (auto [i, j] : odd)
    for (int c = 0; c < copies; ++c) {
      int p = next++, q = next++;
      out.add_edge(i, p);
      out.add_edge(p, q);
      out.add_edge(q, j);
    }
  for (int i : odd_loop)
    for (int c = 0; c < copies; ++c) {
      int p = next++, q = next++;
      out.add_edge(i, p);
      out.add_edge(p, q);
      out.add_edge(q, i);
    }
  return out;
}

KernelResult build_toct_instances(const Graph& g, int k, const KernelOptions& options) {
  if (k < 0) throw ContractViolation("k must be non-negative");
  KernelResult out;
  // Gadget paths are repeated k + 1 times so no solution can afford to cut
  // them. Per graph that is at most 3(k + 1) gadget vertices for each kept
  // pair and 2(k + 1) for each kept vertex.
  out.size_constant = 7.0 * (k + 1) + 2;
  auto approx = approx_vertex_22(g, k, exact_oct_oracle(), options.approx);
  if (!approx) {
    out.trivially_no = true;
    return out;
  }
  const VertexSet& x = approx->result.deleted_vertices;
  out.approx_solution = x;
  const VertexSet p_i = approx->result.witness.p_i();
  const VertexSet p_c = approx->result.witness.p_c();
  const int cross = 4;

  // Only guesses that could be the actual exchange between the sides are kept:
  // vertices joining the clique side must split into two cliques and vice versa.
  std::vector<VertexSet> vcs, vis;
  for (auto& s : subsets_upto(p_i, cross))
    if (clique_partitionable(g, s, 2)) vcs.push_back(std::move(s));
  for (auto& s : subsets_upto(p_c, cross))
    if (independent_partitionable(g, s, 2)) vis.push_back(std::move(s));
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t a = 0; a < vcs.size(); ++a)
    for (size_t b = 0; b < vis.size(); ++b) pairs.emplace_back(a, b);

  struct Built {
    TOCTInstance inst;
    KernelInstanceInfo info;
  };
  const Graph co = g.complement();
  auto build = [&](size_t idx) {
    const VertexSet& v_c = vcs[pairs[idx].first];
    const VertexSet& v_i = vis[pairs[idx].second];
    VertexSet xp = set_union(set_union(x, v_i), v_c);
    auto side = [&](const Graph& base, const VertexSet& part, int& z_size) {
      VertexSet host = set_union(part, xp);
      Graph gi = base.induced(host);
      VertexSet local_x = positions_in(xp, host);
      VertexSet z = relevant_oct_vertices(gi, local_x, options.cap);
      z_size = static_cast<int>(z.size());
      VertexSet keep = set_union(local_x, z);
      Graph star = add_parity_gadgets(gi, keep, k + 1);
      return std::make_pair(std::move(star), positions_in(local_x, keep));
    };
    Built b;
    auto [g1, x1] = side(g, set_minus(p_i, v_c), b.info.z1);
    auto [g2, x2] = side(co, set_minus(p_c, v_i), b.info.z2);
    b.inst.g1 = std::move(g1);
    b.inst.g2 = std::move(g2);
    b.inst.x = x1;
    b.inst.y = x2;
    for (size_t i = 0; i < x1.size(); ++i) b.inst.phi.emplace_back(x1[i], x2[i]);
    b.inst.k = k;
    b.info.v_c = v_c;
    b.info.v_i = v_i;
    b.info.terminals = xp;
    long long m = static_cast<long long>(xp.size()) + b.info.z1 + b.info.z2;
    b.info.size_bound = static_cast<long long>(out.size_constant * static_cast<double>(m * m));
    return b;
  };
  auto built = par::map<Built>(pairs.size(), build);
  for (auto& b : built) {
    out.instances.push_back(std::move(b.inst));
    out.info.push_back(std::move(b.info));
  }
  return out;
}

bool toct_decide_brute(const TOCTInstance& h, int cap) {
  const int t = static_cast<int>(h.x.size());
  if (t > cap) throw CapExceeded("toct.terminals", cap, t);
  if (h.y.size() != h.x.size() || h.phi.size() != h.x.size())
    throw ContractViolation("toct: x, y and phi must have the same size");
  std::vector<int> xs(t), ys(t);
  for (int i = 0; i < t; ++i) {
    xs[i] = h.phi[i].first;
    ys[i] = h.phi[i].second;
  }
  AvoidingSolver s1(h.g1, h.x);
  AvoidingSolver s2(h.g2, h.y);
  // label per terminal: 0 kept in g1, 1 deleted, 2 kept in g2
  std::vector<int> label(t, 0);
  VertexSet in1, in2;
  auto rec = [&](auto&& self, int i, int deleted) -> bool {
    if (i == t) {
      VertexSet banned1, banned2;
      for (int j = 0; j < t; ++j) {
        if (label[j] != 0) banned1.push_back(xs[j]);
        if (label[j] != 2) banned2.push_back(ys[j]);
      }
      std::sort(banned1.begin(), banned1.end());
      std::sort(banned2.begin(), banned2.end());
      auto z1 = s1.solve(banned1, h.k - deleted);
      if (!z1) return false;
      auto z2 = s2.solve(banned2, h.k - deleted - static_cast<int>(z1->size()));
      return z2.has_value();
    }
    // Kept terminals must stay bipartite on their own side.
    label[i] = 0;
    in1.push_back(xs[i]);
    std::vector<int> sorted1 = in1;
    std::sort(sorted1.begin(), sorted1.end());
    if (is_bipartite(h.g1.induced(sorted1)) && self(self, i + 1, deleted)) return true;
    in1.pop_back();
    if (deleted < h.k) {
      label[i] = 1;
      if (self(self, i + 1, deleted + 1)) return true;
    }
    label[i] = 2;
    in2.push_back(ys[i]);
    std::vector<int> sorted2 = in2;
    std::sort(sorted2.begin(), sorted2.end());
    if (is_bipartite(h.g2.induced(sorted2)) && self(self, i + 1, deleted)) return true;
    in2.pop_back();
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace rlpart

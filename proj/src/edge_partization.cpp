#include "rlpart/edge_partization.hpp"

#include <algorithm>
#include <set>

#include "odd_cycles.hpp"
#include "rlpart/oct.hpp"
#include "rlpart/recognition.hpp"

namespace rlpart {

namespace {

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

int edges_inside(const Graph& g, const VertexSet& s) {
  int count = 0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) count += g.adjacent(s[i], s[j]) ? 1 : 0;
  return count;
}

EdgeSet edges_within(const Graph& g, const VertexSet& s) {
  EdgeSet out;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) out.push_back(make_edge(s[i], s[j]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> cliques_within(const Graph& g, const VertexSet& set, std::optional<int> pivot, int k) {
  std::optional<int> local_pivot;
  if (pivot) local_pivot = static_cast<int>(std::lower_bound(set.begin(), set.end(), *pivot) - set.begin());
  std::vector<VertexSet> out;
  for (const VertexSet& c : enumerate_cliques_sparse(g.induced(set), local_pivot, k)) out.push_back(lift(c, set));
  return out;
}

// Adds v to the first part of q it fits in without any further deletion.
bool fits_into(const Graph& g, ICPartition& q, int v) {
  for (auto& part : q.independent_parts)
    if (std::none_of(part.begin(), part.end(), [&](int u) { return g.adjacent(u, v); })) {
      part.insert(std::lower_bound(part.begin(), part.end(), v), v);
      return true;
    }
  for (auto& part : q.clique_parts)
    if (std::all_of(part.begin(), part.end(), [&](int u) { return g.adjacent(u, v); })) {
      part.insert(std::lower_bound(part.begin(), part.end(), v), v);
      return true;
    }
  return false;
}

using Compress = std::optional<DeletionResult> (*)(const Graph&, const EdgeSet&, const ICPartition&, int);

std::optional<DeletionResult> drive(const Graph& g, int k, int r, int l, Compress compress) {
  if (k < 0) throw ContractViolation("k must be non-negative");
  DeletionResult cur;
  cur.witness.independent_parts.resize(r);
  cur.witness.clique_parts.resize(l);
  VertexSet prefix;
  for (int v = 0; v < g.n(); ++v) {
    prefix.push_back(v);
    Graph gi = g.induced(prefix);
    if (fits_into(gi, cur.witness, v)) continue;
    auto next = compress(gi, cur.deleted_edges, cur.witness, k);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  cur.size = static_cast<int>(cur.deleted_edges.size());
  return cur;
}

}  // namespace

std::vector<VertexSet> enumerate_cliques_sparse(const Graph& g, std::optional<int> pivot, int k) {
  int budget_edges = 0;
  for (const Edge& e : g.edges())
    if (!pivot || (e.first != *pivot && e.second != *pivot)) ++budget_edges;
  if (budget_edges > k) throw ContractViolation("enumerate_cliques_sparse: too many edges for k");
  auto [order, degeneracy] = degeneracy_order(g);
  (void)degeneracy;
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  std::vector<VertexSet> out{{}};
  VertexSet cur;
  // Each clique is produced once, from its earliest vertex in the order.
  auto extend = [&](auto&& self, const std::vector<int>& cand) -> void {
    for (size_t i = 0; i < cand.size(); ++i) {
      int w = cand[i];
      cur.push_back(w);
      VertexSet sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      std::vector<int> next;
      for (size_t j = i + 1; j < cand.size(); ++j)
        if (g.adjacent(w, cand[j])) next.push_back(cand[j]);
      self(self, next);
      cur.pop_back();
    }
  };
  for (int v : order) {
    std::vector<int> later;
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v]) later.push_back(w);
    cur.assign(1, v);
    out.push_back({v});
    extend(extend, later);
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

std::optional<DeletionResult> compress_edge_21(const Graph& g, const EdgeSet& s_prime, const ICPartition& rest,
                                               int k) {
  if (static_cast<int>(s_prime.size()) > k) throw ContractViolation("compress_edge_21: |s_prime| > k");
  const int v = g.n() - 1;
  const VertexSet& i1 = rest.independent_parts.at(0);
  const VertexSet& i2 = rest.independent_parts.at(1);
  const VertexSet& c = rest.clique_parts.at(0);
  auto as = cliques_within(g, set_union(i1, {v}), v, k);
  auto bs = cliques_within(g, i2, std::nullopt, k);
  std::optional<DeletionResult> best;
  int bound = k;
  for (const VertexSet& a : as)
    for (const VertexSet& b : bs) {
      VertexSet ab = set_union(a, b);
      if (!is_clique(g, ab)) continue;
      VertexSet p_c = ab;
      for (int u : c)
        if (std::all_of(ab.begin(), ab.end(), [&](int w) { return g.adjacent(u, w); })) p_c.push_back(u);
      std::sort(p_c.begin(), p_c.end());
      VertexSet others = set_minus(all_vertices(g.n()), p_c);
      auto eoct = solve_eoct(g.induced(others), bound);
      if (!eoct) continue;
      if (best && static_cast<int>(eoct->deleted.size()) >= best->size) continue;
      DeletionResult res;
      for (const Edge& e : eoct->deleted) res.deleted_edges.push_back(make_edge(others[e.first], others[e.second]));
      std::sort(res.deleted_edges.begin(), res.deleted_edges.end());
      res.size = static_cast<int>(res.deleted_edges.size());
      res.witness.independent_parts = {lift(eoct->coloring.left, others), lift(eoct->coloring.right, others)};
      res.witness.clique_parts = {p_c};
      best = std::move(res);
      bound = best->size;
      if (bound == 0) return best;
    }
  return best;
}

std::optional<DeletionResult> solve_edge_21(const Graph& g, int k) { return drive(g, k, 2, 1, compress_edge_21); }

std::optional<DeletionResult> compress_edge_12(const Graph& g, const EdgeSet& s_prime, const ICPartition& rest,
                                               int k) {
  if (static_cast<int>(s_prime.size()) > k) throw ContractViolation("compress_edge_12: |s_prime| > k");
  const int v = g.n() - 1;
  const VertexSet& i = rest.independent_parts.at(0);
  const VertexSet movable = set_union(set_union(rest.clique_parts.at(0), rest.clique_parts.at(1)), {v});
  int root = 0;
  while (root * root < 2 * k) ++root;
  const int u_bound = 2 * (root + 1) + 1;

  auto ks = cliques_within(g, i, std::nullopt, k);
  std::set<VertexSet> unions;
  for (size_t x = 0; x < ks.size(); ++x)
    for (size_t y = x; y < ks.size(); ++y) unions.insert(set_union(ks[x], ks[y]));
  std::vector<VertexSet> as(unions.begin(), unions.end());
  std::sort(as.begin(), as.end(), size_lex_less);

  std::optional<DeletionResult> best;
  int bound = k;
  for (const VertexSet& a : as) {
    VertexSet pi0 = set_minus(i, a);
    if (edges_inside(g, pi0) > bound) continue;
    VertexSet pc0 = set_union(a, movable);
    VertexSet deletable;
    for (size_t j = 0; j < pc0.size(); ++j)
      if (set_contains(movable, pc0[j])) deletable.push_back(static_cast<int>(j));
    // Moving more vertices out of the clique side never lowers the cost, so
    // inclusion-minimal choices of U are enough.
    for (const VertexSet& local : detail::minimal_octs(g.induced(pc0).complement(), deletable, u_bound)) {
      VertexSet u = lift(local, pc0);
      VertexSet p_i = set_union(pi0, u);
      int cost = edges_inside(g, p_i);
      if (cost > bound || (best && cost >= best->size)) continue;
      VertexSet p_c = set_minus(pc0, u);
      auto split = is_bipartite(g.induced(p_c).complement());
      if (!split) continue;
      DeletionResult res;
      res.deleted_edges = edges_within(g, p_i);
      res.size = cost;
      res.witness.independent_parts = {p_i};
      res.witness.clique_parts = {lift(split->left, p_c), lift(split->right, p_c)};
      best = std::move(res);
      bound = cost;
      if (bound == 0) return best;
    }
  }
  return best;
}

std::optional<DeletionResult> solve_edge_12(const Graph& g, int k) { return drive(g, k, 1, 2, compress_edge_12); }

std::optional<DeletionResult> solve_edge(const Graph& g, RLParams params, int k) {
  if (params == RLParams{2, 1}) return solve_edge_21(g, k);
  if (params == RLParams{1, 2}) return solve_edge_12(g, k);
  throw ContractViolation("edge solver supports (2,1) and (1,2)");
}

}  // namespace rlpart

#include "rlpart/oct.hpp"

#include <algorithm>

#include "rlpart/parallel.hpp"

namespace rlpart {

namespace {

// Subsets of `items` ordered by size, then lexicographically.
std::vector<VertexSet> subsets_by_size(const VertexSet& items, int max_size) {
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

// Components of g - x, each colored from its lowest id.
Bipartition base_coloring(const Graph& g, const VertexSet& x) {
  std::vector<char> in_x(g.n(), 0);
  for (int v : x) in_x[v] = 1;
  std::vector<int> color(g.n(), -1);
  Bipartition b;
  for (int s = 0; s < g.n(); ++s) {
    if (in_x[s] || color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int w : g.neighbors(u)) {
        if (in_x[w]) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          throw ContractViolation("g - x is not bipartite");
        }
      }
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    if (color[v] == 0) b.left.push_back(v);
    if (color[v] == 1) b.right.push_back(v);
  }
  return b;
}

Bipartition coloring_of(const Graph& g, const VertexSet& deleted) {
  VertexSet rest = set_minus(all_vertices(g.n()), deleted);
  auto b = is_bipartite(g.induced(rest));
  if (!b) throw ContractViolation("internal: residual graph is not bipartite");
  return Bipartition{lift(b->left, rest), lift(b->right, rest)};
}

}  // namespace

IndependentOct make_oct_independent(const Graph& g, const VertexSet& x) {
  base_coloring(g, x);  // validates that x is an OCT
  EdgeSet inner;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (g.adjacent(x[i], x[j])) inner.push_back(make_edge(x[i], x[j]));
  IndependentOct out;
  out.x = x;
  if (inner.empty()) {
    out.graph = g;
    return out;
  }
  Graph h = g.without_edges(inner).with_extra_vertices(2 * static_cast<int>(inner.size()));
  int next = g.n();
  for (auto [a, b] : inner) {
    int p = next++, q = next++;
    h.add_edge(a, p);
    h.add_edge(p, q);
    h.add_edge(q, b);
    out.subdivision.push_back(p);
    out.subdivision.push_back(q);
  }
  out.graph = std::move(h);
  return out;
}

AuxiliaryGraph build_auxiliary_graph(const Graph& g, const VertexSet& x) {
  if (!is_independent(g, x)) throw ContractViolation("x is not independent");
  AuxiliaryGraph aux;
  aux.x = x;
  aux.base_bipartition = base_coloring(g, x);
  int n = g.n();
  std::vector<int> side(n, -1);
  for (int v : aux.base_bipartition.left) side[v] = 0;
  for (int v : aux.base_bipartition.right) side[v] = 1;
  Graph h = g.with_extra_vertices(static_cast<int>(x.size()));
  // Strip the edges of x; they are rebuilt per copy below.
  EdgeSet x_edges;
  for (int v : x)
    for (int w : g.neighbors(v)) x_edges.push_back(make_edge(v, w));
  std::sort(x_edges.begin(), x_edges.end());
  x_edges.erase(std::unique(x_edges.begin(), x_edges.end()), x_edges.end());
  h = h.without_edges(x_edges);
  aux.to_original.resize(n + x.size());
  for (int v = 0; v < n; ++v) aux.to_original[v] = v;
  for (size_t j = 0; j < x.size(); ++j) {
    int v = x[j];
    int first = v, second = n + static_cast<int>(j);
    h.set_label(second, g.label(v));
    aux.to_original[second] = v;
    for (int w : g.neighbors(v)) {
      if (side[w] == 1) h.add_edge(first, w);
      if (side[w] == 0) h.add_edge(second, w);
    }
    aux.duplicate_map.push_back({v, first, second});
  }
  aux.graph = std::move(h);
  return aux;
}

std::optional<VertexSet> min_oct_avoiding(const AuxiliaryGraph& aux, const VertexSet& banned, int budget,
                                          const VertexSet& fixed) {
  if (budget < 0) return std::nullopt;
  VertexSet removed;
  std::vector<const Duplicate*> kept;
  for (const Duplicate& d : aux.duplicate_map) {
    if (set_contains(banned, d.original)) {
      removed.push_back(d.first);
      removed.push_back(d.second);
    } else {
      kept.push_back(&d);
    }
  }
  for (int b : banned)
    if (!set_contains(aux.x, b)) throw ContractViolation("banned must be a subset of x");
  std::sort(removed.begin(), removed.end());
  if (kept.empty()) return VertexSet{};
  VertexSet fixed_clean = set_minus(fixed, removed);

  std::optional<VertexSet> best;
  int best_size = budget + 1;
  const int free_bits = static_cast<int>(kept.size()) - 1;
  for (long long mask = 0; mask < (1LL << free_bits); ++mask) {
    VertexSet s_side{kept[0]->first}, t_side{kept[0]->second};
    for (int j = 1; j <= free_bits; ++j) {
      bool flip = (mask >> (free_bits - j)) & 1LL;
      s_side.push_back(flip ? kept[j]->second : kept[j]->first);
      t_side.push_back(flip ? kept[j]->first : kept[j]->second);
    }
    std::sort(s_side.begin(), s_side.end());
    std::sort(t_side.begin(), t_side.end());
    VertexSet fx = set_minus(set_minus(fixed_clean, s_side), t_side);
    VertexCut cut = min_vertex_cut(aux.graph, s_side, t_side, removed, fx, best_size - 1);
    if (!cut.ok()) continue;
    if (static_cast<int>(cut.cut.size()) < best_size) {
      best_size = static_cast<int>(cut.cut.size());
      best = cut.cut;
      if (best_size == 0) break;
    }
  }
  return best;
}

std::optional<VertexSet> min_oct_avoiding(const Graph& g, const VertexSet& x, const VertexSet& banned,
                                          int budget, const VertexSet& fixed) {
  return min_oct_avoiding(build_auxiliary_graph(g, x), banned, budget, fixed);
}

std::optional<VertexSet> compress_oct(const Graph& g, const VertexSet& s_prime, int budget) {
  if (budget < 0) return std::nullopt;
  IndependentOct ind = make_oct_independent(g, s_prime);
  AuxiliaryGraph aux = build_auxiliary_graph(ind.graph, ind.x);
  auto ys = subsets_by_size(ind.x, budget);
  auto solve_for = [&](const VertexSet& y, int limit) -> std::optional<VertexSet> {
    auto z = min_oct_avoiding(aux, y, limit - static_cast<int>(y.size()), ind.subdivision);
    if (!z) return std::nullopt;
    return set_union(y, *z);
  };
  if (par::serial_now()) {
    std::optional<VertexSet> best;
    int limit = budget;
    for (const VertexSet& y : ys) {
      if (static_cast<int>(y.size()) > limit) break;
      if (auto s = solve_for(y, limit)) {
        if (!best || s->size() < best->size()) {
          best = std::move(s);
          limit = static_cast<int>(best->size()) - 1;
        }
      }
    }
    return best;
  }
  auto results = par::map<std::optional<VertexSet>>(ys.size(), [&](size_t i) { return solve_for(ys[i], budget); });
  std::optional<VertexSet> best;
  for (auto& r : results)
    if (r && (!best || r->size() < best->size())) best = std::move(r);
  return best;
}

std::optional<OctResult> solve_oct(const Graph& g, int k) {
  if (k < 0) throw ContractViolation("k must be non-negative");
  VertexSet sol;
  VertexSet prefix;
  for (int v = 0; v < g.n(); ++v) {
    prefix.push_back(v);
    Graph gi = g.induced(prefix);  // prefix is 0..v, so ids coincide
    if (is_bipartite(gi.without(sol))) continue;
    VertexSet s_prime = set_union(sol, VertexSet{v});
    auto smaller = compress_oct(gi, s_prime, static_cast<int>(sol.size()));
    sol = smaller ? *smaller : s_prime;
    if (static_cast<int>(sol.size()) > k) return std::nullopt;
  }
  return OctResult{sol, coloring_of(g, sol)};
}

int min_oct_size(const Graph& g, int cap) {
  auto r = solve_oct(g, cap);
  return r ? static_cast<int>(r->deleted.size()) : -1;
}

namespace {

std::optional<EdgeSet> compress_eoct(const Graph& h, const EdgeSet& f_prime, int budget) {
  if (budget < 0) return std::nullopt;
  Graph rest = h.without_edges(f_prime);
  auto base = is_bipartite(rest);
  if (!base) throw ContractViolation("internal: edge set is not an edge OCT");
  std::vector<int> color(h.n(), 0);
  for (int v : base->right) color[v] = 1;
  VertexSet ends;
  for (auto [u, v] : f_prime) {
    ends.push_back(u);
    ends.push_back(v);
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  const int free_bits = static_cast<int>(ends.size()) - 1;
  std::optional<EdgeSet> best;
  int best_size = budget + 1;
  std::vector<int> flip(h.n(), 0);
  for (long long mask = 0; mask < (1LL << free_bits); ++mask) {
    VertexSet keep_side{ends[0]}, flip_side;
    flip[ends[0]] = 0;
    for (int j = 1; j <= free_bits; ++j) {
      int f = static_cast<int>((mask >> (free_bits - j)) & 1LL);
      flip[ends[j]] = f;
      (f ? flip_side : keep_side).push_back(ends[j]);
    }
    EdgeSet forced;
    for (auto [u, v] : f_prime)
      if ((color[u] ^ flip[u]) == (color[v] ^ flip[v])) forced.emplace_back(u, v);
    int room = best_size - 1 - static_cast<int>(forced.size());
    if (room < 0) continue;
    EdgeCut cut = min_edge_cut(rest, keep_side, flip_side, room);
    if (!cut.ok()) continue;
    EdgeSet total = forced;
    total.insert(total.end(), cut.cut.begin(), cut.cut.end());
    std::sort(total.begin(), total.end());
    if (static_cast<int>(total.size()) < best_size) {
      best_size = static_cast<int>(total.size());
      best = std::move(total);
    }
  }
  return best;
}

}  // namespace

std::optional<EoctResult> solve_eoct(const Graph& g, int k) {
  if (k < 0) throw ContractViolation("k must be non-negative");
  Graph h(g.n());
  EdgeSet sol;
  for (const Edge& e : g.edges()) {
    h.add_edge(e.first, e.second);
    if (is_bipartite(h.without_edges(sol))) continue;
    EdgeSet f_prime = sol;
    f_prime.insert(std::lower_bound(f_prime.begin(), f_prime.end(), e), e);
    auto smaller = compress_eoct(h, f_prime, static_cast<int>(sol.size()));
    sol = smaller ? *smaller : f_prime;
    if (static_cast<int>(sol.size()) > k) return std::nullopt;
  }
  auto b = is_bipartite(g.without_edges(sol));
  return EoctResult{sol, *b};
}

}  // namespace rlpart

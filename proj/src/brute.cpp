#include "rlpart/brute.hpp"

#include <algorithm>

namespace rlpart::brute {

namespace {

void cap(const char* name, long long limit, long long value) {
  if (value > limit) throw CapExceeded(name, limit, value);
}

// Plain DFS labeling search over labels 0..parts-1.
struct Labeler {
  const Graph& g;
  int r;
  int parts;
  std::vector<int> label;

  bool fits(int v, int lab) const {
    for (int u = 0; u < v; ++u) {
      if (label[u] != lab) continue;
      bool adj = g.adjacent(u, v);
      if (lab < r && adj) return false;
      if (lab >= r && !adj) return false;
    }
    return true;
  }

  bool run(int v) {
    if (v == g.n()) return true;
    for (int lab = 0; lab < parts; ++lab) {
      if (!fits(v, lab)) continue;
      label[v] = lab;
      if (run(v + 1)) return true;
    }
    label[v] = -1;
    return false;
  }
};

std::optional<ICPartition> label_search(const Graph& g, RLParams params) {
  Labeler lab{g, params.r, params.r + params.l, std::vector<int>(g.n(), -1)};
  if (!lab.run(0)) return std::nullopt;
  ICPartition p;
  p.independent_parts.resize(params.r);
  p.clique_parts.resize(params.l);
  for (int v = 0; v < g.n(); ++v) {
    int l = lab.label[v];
    if (l < params.r)
      p.independent_parts[l].push_back(v);
    else
      p.clique_parts[l - params.r].push_back(v);
  }
  return p;
}

bool two_colorable(const Graph& g, const std::vector<char>& present) {
  std::vector<int> color(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (!present[s] || color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (!present[w]) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool two_colorable_without_edges(const Graph& g, const std::vector<char>& dropped_edge,
                                 const EdgeSet& edges) {
  Graph h(g.n());
  for (size_t i = 0; i < edges.size(); ++i)
    if (!dropped_edge[i]) h.add_edge(edges[i].first, edges[i].second);
  return two_colorable(h, std::vector<char>(g.n(), 1));
}

// Calls visit(indices) on all k-subsets of 0..n-1 in lexicographic order until
// visit returns true.
template <class F>
bool for_each_subset(int n, int k, F&& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Graph remove_vertices(const Graph& g, const std::vector<int>& del) {
  std::vector<char> keep(g.n(), 1);
  for (int v : del) keep[v] = 0;
  VertexSet rest;
  for (int v = 0; v < g.n(); ++v)
    if (keep[v]) rest.push_back(v);
  return g.induced(rest);
}

bool has_clique_of_size(const Graph& g, const std::vector<int>& verts, int size) {
  if (size <= 0) return true;
  if (static_cast<int>(verts.size()) < size) return false;
  return for_each_subset(static_cast<int>(verts.size()), size, [&](const std::vector<int>& idx) {
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = i + 1; j < idx.size(); ++j)
        if (!g.adjacent(verts[idx[i]], verts[idx[j]])) return false;
    return true;
  });
}

bool has_independent_of_size(const Graph& g, const std::vector<int>& verts, int size) {
  if (size <= 0) return true;
  if (static_cast<int>(verts.size()) < size) return false;
  return for_each_subset(static_cast<int>(verts.size()), size, [&](const std::vector<int>& idx) {
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = i + 1; j < idx.size(); ++j)
        if (g.adjacent(verts[idx[i]], verts[idx[j]])) return false;
    return true;
  });
}

}  // namespace

std::optional<ICPartition> brute_recognize(const Graph& g, RLParams params, int max_n) {
  cap("brute_recognize.n", max_n, g.n());
  return label_search(g, params);
}

VertexAnswer brute_min_vertex_del(const Graph& g, RLParams params, int max_n) {
  cap("brute_min_vertex_del.n", max_n, g.n());
  VertexAnswer ans;
  for (int s = 0; s <= g.n(); ++s) {
    bool found = for_each_subset(g.n(), s, [&](const std::vector<int>& idx) {
      if (!label_search(remove_vertices(g, idx), params)) return false;
      ans.size = s;
      ans.set.assign(idx.begin(), idx.end());
      return true;
    });
    if (found) return ans;
  }
  ans.size = g.n();
  ans.set = all_vertices(g.n());
  return ans;
}

EdgeAnswer brute_min_edge_del(const Graph& g, RLParams params, int max_size) {
  if (max_size < 0) cap("brute_min_edge_del.m", 18, g.m());
  EdgeSet edges = g.edges();
  int m = static_cast<int>(edges.size());
  int top = max_size < 0 ? m : std::min(m, max_size);
  EdgeAnswer ans;
  for (int s = 0; s <= top; ++s) {
    bool found = for_each_subset(m, s, [&](const std::vector<int>& idx) {
      Graph h(g.n());
      std::vector<char> drop(m, 0);
      for (int i : idx) drop[i] = 1;
      for (int i = 0; i < m; ++i)
        if (!drop[i]) h.add_edge(edges[i].first, edges[i].second);
      if (!label_search(h, params)) return false;
      ans.size = s;
      for (int i : idx) ans.set.push_back(edges[i]);
      return true;
    });
    if (found) return ans;
  }
  ans.size = -1;
  return ans;
}

int brute_oct(const Graph& g, int max_n) {
  cap("brute_oct.n", max_n, g.n());
  for (int s = 0; s <= g.n(); ++s) {
    bool found = for_each_subset(g.n(), s, [&](const std::vector<int>& idx) {
      std::vector<char> present(g.n(), 1);
      for (int v : idx) present[v] = 0;
      return two_colorable(g, present);
    });
    if (found) return s;
  }
  return g.n();
}

int brute_eoct(const Graph& g) {
  cap("brute_eoct.m", 21, g.m());
  EdgeSet edges = g.edges();
  int m = static_cast<int>(edges.size());
  for (int s = 0; s <= m; ++s) {
    bool found = for_each_subset(m, s, [&](const std::vector<int>& idx) {
      std::vector<char> drop(m, 0);
      for (int i : idx) drop[i] = 1;
      return two_colorable_without_edges(g, drop, edges);
    });
    if (found) return s;
  }
  return m;
}

int brute_oct_avoiding(const Graph& g, const VertexSet& avoid, const VertexSet& banned) {
  cap("brute_oct_avoiding.n", 12, g.n());
  std::vector<char> present(g.n(), 1);
  std::vector<char> locked(g.n(), 0);
  for (int v : banned) present[v] = 0;
  for (int v : avoid) locked[v] = 1;
  std::vector<int> free_vertices;
  for (int v = 0; v < g.n(); ++v)
    if (present[v] && !locked[v]) free_vertices.push_back(v);
  int f = static_cast<int>(free_vertices.size());
  for (int s = 0; s <= f; ++s) {
    bool found = for_each_subset(f, s, [&](const std::vector<int>& idx) {
      std::vector<char> p = present;
      for (int i : idx) p[free_vertices[i]] = 0;
      return two_colorable(g, p);
    });
    if (found) return s;
  }
  return -1;
}

std::vector<SplitPartition> brute_split_partitions(const Graph& g, RLParams params) {
  cap("brute_split_partitions.n", 12, g.n());
  std::vector<SplitPartition> out;
  for (unsigned mask = 0; mask < (1U << g.n()); ++mask) {
    SplitPartition sp;
    for (int v = 0; v < g.n(); ++v) ((mask >> v) & 1U ? sp.v1 : sp.v2).push_back(v);
    if (has_clique_of_size(g, sp.v1, params.r + 1)) continue;
    if (has_independent_of_size(g, sp.v2, params.l + 1)) continue;
    out.push_back(std::move(sp));
  }
  return out;
}

std::vector<ICPartition> brute_ic_partitions(const Graph& g, RLParams params) {
  cap("brute_ic_partitions.n", 12, g.n());
  std::vector<ICPartition> out;
  for (unsigned mask = 0; mask < (1U << g.n()); ++mask) {
    VertexSet pi, pc;
    for (int v = 0; v < g.n(); ++v) ((mask >> v) & 1U ? pc : pi).push_back(v);
    auto wi = label_search(g.induced(pi), RLParams{params.r, 0});
    if (params.r == 0 && !pi.empty()) continue;
    if (!pi.empty() && !wi) continue;
    auto wc = label_search(g.induced(pc), RLParams{0, params.l});
    if (params.l == 0 && !pc.empty()) continue;
    if (!pc.empty() && !wc) continue;
    ICPartition p;
    p.independent_parts.resize(params.r);
    p.clique_parts.resize(params.l);
    if (!pi.empty()) p = ICPartition{wi->lifted(pi).independent_parts, p.clique_parts};
    if (!pc.empty()) p.clique_parts = wc->lifted(pc).clique_parts;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace rlpart::brute

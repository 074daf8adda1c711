#include "rlpart/recognition.hpp"

#include <algorithm>

namespace rlpart {

namespace {

bool has_triangle(const Graph& g, const VertexSet& set, bool in_complement) {
  for (size_t a = 0; a < set.size(); ++a)
    for (size_t b = a + 1; b < set.size(); ++b) {
      if (g.adjacent(set[a], set[b]) == in_complement) continue;
      for (size_t c = b + 1; c < set.size(); ++c)
        if (g.adjacent(set[a], set[c]) != in_complement && g.adjacent(set[b], set[c]) != in_complement)
          return true;
    }
  return false;
}

// clique number of g[set] <= r
bool clique_number_at_most(const Graph& g, const VertexSet& set, int r) {
  if (r == 0) return set.empty();
  if (r == 1) return is_independent(g, set);
  return !has_triangle(g, set, false);
}

// independence number of g[set] <= l
bool independence_number_at_most(const Graph& g, const VertexSet& set, int l) {
  if (l == 0) return set.empty();
  if (l == 1) return is_clique(g, set);
  return !has_triangle(g, set, true);
}

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

template <class Accept>
std::vector<VertexSet> filtered_subsets(const VertexSet& items, int max_size, Accept accept) {
  std::vector<VertexSet> out;
  for (auto& s : subsets_upto(items, max_size))
    if (accept(s)) out.push_back(std::move(s));
  return out;
}

}  // namespace

int ramsey_bound(RLParams p) {
  p.validate();
  if (p.r == 0 || p.l == 0) return 1;
  if (p.r == 1 && p.l == 1) return 2;
  if (p.r == 2 && p.l == 2) return 6;
  return 3;
}

bool independent_partitionable(const Graph& g, const VertexSet& set, int r) {
  if (set.empty()) return true;
  if (r == 0) return false;
  if (r == 1) return is_independent(g, set);
  return is_bipartite(g.induced(set)).has_value();
}

bool clique_partitionable(const Graph& g, const VertexSet& set, int l) {
  if (set.empty()) return true;
  if (l == 0) return false;
  if (l == 1) return is_clique(g, set);
  return is_bipartite(g.induced(set).complement()).has_value();
}

std::optional<ICPartition> ic_witness(const Graph& g, const VertexSet& p_i, const VertexSet& p_c,
                                      RLParams params) {
  ICPartition p;
  p.independent_parts.resize(params.r);
  p.clique_parts.resize(params.l);
  if (!p_i.empty()) {
    if (params.r == 0) return std::nullopt;
    if (params.r == 1) {
      if (!is_independent(g, p_i)) return std::nullopt;
      p.independent_parts[0] = p_i;
    } else {
      auto b = is_bipartite(g.induced(p_i));
      if (!b) return std::nullopt;
      p.independent_parts[0] = lift(b->left, p_i);
      p.independent_parts[1] = lift(b->right, p_i);
    }
  }
  if (!p_c.empty()) {
    if (params.l == 0) return std::nullopt;
    if (params.l == 1) {
      if (!is_clique(g, p_c)) return std::nullopt;
      p.clique_parts[0] = p_c;
    } else {
      auto b = is_bipartite(g.induced(p_c).complement());
      if (!b) return std::nullopt;
      p.clique_parts[0] = lift(b->left, p_c);
      p.clique_parts[1] = lift(b->right, p_c);
    }
  }
  return p;
}

bool verify_ic_partition(const Graph& g, const ICPartition& p, RLParams params) {
  if (static_cast<int>(p.independent_parts.size()) > params.r) return false;
  if (static_cast<int>(p.clique_parts.size()) > params.l) return false;
  std::vector<int> seen(g.n(), 0);
  auto mark = [&](const VertexSet& part) {
    for (int v : part) {
      if (v < 0 || v >= g.n() || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  };
  for (const auto& part : p.independent_parts)
    if (!mark(part) || !is_independent(g, part)) return false;
  for (const auto& part : p.clique_parts)
    if (!mark(part) || !is_clique(g, part)) return false;
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

bool verify_split_partition(const Graph& g, const SplitPartition& p, RLParams params) {
  std::vector<int> seen(g.n(), 0);
  for (const VertexSet* part : {&p.v1, &p.v2})
    for (int v : *part) {
      if (v < 0 || v >= g.n() || seen[v]) return false;
      seen[v] = 1;
    }
  if (!std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; })) return false;
  return clique_number_at_most(g, p.v1, params.r) && independence_number_at_most(g, p.v2, params.l);
}

std::optional<SplitPartition> compress_split(const Graph& g, int v, const SplitPartition& ab,
                                             RLParams params) {
  const int bound = ramsey_bound(params) - 1;
  // U leaves B for V1, so its clique number must stay <= r; W leaves A for V2.
  auto us = filtered_subsets(ab.v2, bound, [&](const VertexSet& s) { return clique_number_at_most(g, s, params.r); });
  auto ws = filtered_subsets(ab.v1, bound,
                             [&](const VertexSet& s) { return independence_number_at_most(g, s, params.l); });
  for (int total = 0; total <= 2 * bound; ++total)
    for (const VertexSet& u : us) {
      int wsize = total - static_cast<int>(u.size());
      if (wsize < 0 || wsize > bound) continue;
      for (const VertexSet& w : ws) {
        if (static_cast<int>(w.size()) != wsize) continue;
        VertexSet v1 = set_minus(set_union(ab.v1, u), w);
        VertexSet v2 = set_minus(set_union(ab.v2, w), u);
        VertexSet v1v = set_union(v1, {v});
        if (clique_number_at_most(g, v1v, params.r) && independence_number_at_most(g, v2, params.l))
          return SplitPartition{v1v, v2};
        VertexSet v2v = set_union(v2, {v});
        if (clique_number_at_most(g, v1, params.r) && independence_number_at_most(g, v2v, params.l))
          return SplitPartition{v1, v2v};
      }
    }
  return std::nullopt;
}

std::optional<SplitPartition> split_partition(const Graph& g, RLParams params) {
  params.validate();
  if (params.r == 0 || params.l == 0) {
    SplitPartition sp;
    if (params.l == 0) {
      sp.v1 = all_vertices(g.n());
      if (!clique_number_at_most(g, sp.v1, params.r)) return std::nullopt;
    } else {
      sp.v2 = all_vertices(g.n());
      if (!independence_number_at_most(g, sp.v2, params.l)) return std::nullopt;
    }
    return sp;
  }
  SplitPartition ab;
  VertexSet prefix;
  for (int v = 0; v < g.n(); ++v) {
    prefix.push_back(v);
    auto next = compress_split(g.induced(prefix), v, ab, params);
    if (!next) return std::nullopt;
    ab = std::move(*next);
  }
  return ab;
}

std::optional<ICPartition> recognize_rl(const Graph& g, RLParams params) {
  params.validate();
  VertexSet all = all_vertices(g.n());
  if (params.r == 0) return ic_witness(g, {}, all, params);
  if (params.l == 0) return ic_witness(g, all, {}, params);
  auto sp = split_partition(g, params);
  if (!sp) return std::nullopt;
  const int bound = params.r * params.l;
  auto us = filtered_subsets(sp->v2, bound,
                             [&](const VertexSet& s) { return independent_partitionable(g, s, params.r); });
  auto ws = filtered_subsets(sp->v1, bound,
                             [&](const VertexSet& s) { return clique_partitionable(g, s, params.l); });
  for (const VertexSet& u : us)
    for (const VertexSet& w : ws) {
      VertexSet pi = set_minus(set_union(sp->v1, u), w);
      VertexSet pc = set_minus(set_union(sp->v2, w), u);
      if (!independent_partitionable(g, pi, params.r)) continue;
      if (!clique_partitionable(g, pc, params.l)) continue;
      return ic_witness(g, pi, pc, params);
    }
  return std::nullopt;
}

std::vector<ICPartition> enumerate_ic_partitions(const Graph& g, RLParams params, int cap) {
  if (g.n() > cap) throw CapExceeded("enumerate_ic_partitions.n", cap, g.n());
  std::vector<ICPartition> out;
  VertexSet pi, pc;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == g.n()) {
      out.push_back(*ic_witness(g, pi, pc, params));
      return;
    }
    pi.push_back(v);
    if (independent_partitionable(g, pi, params.r)) self(self, v + 1);
    pi.pop_back();
    pc.push_back(v);
    if (clique_partitionable(g, pc, params.l)) self(self, v + 1);
    pc.pop_back();
  };
  rec(rec, 0);
  return out;
}

}  // namespace rlpart

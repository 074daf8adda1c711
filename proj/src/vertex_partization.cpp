#include "rlpart/vertex_partization.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "odd_cycles.hpp"
#include "rlpart/oct.hpp"
#include "rlpart/parallel.hpp"
#include "rlpart/recognition.hpp"

namespace rlpart {

namespace {

constexpr RLParams k22{2, 2};
constexpr int kCross = 4;  // r * l for (2,2)

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

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

// Minimum OCTs of g[set] (or of its complement), shared across guesses.
class OctCache {
 public:
  explicit OctCache(const Graph& g) : g_(g) {}

  std::optional<VertexSet> solve(const VertexSet& set, bool complement, int budget) {
    if (budget < 0) return std::nullopt;
    auto key = std::make_pair(complement, set);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = entries_.find(key);
      if (it != entries_.end()) {
        const Entry& e = it->second;
        if (e.solution) {
          if (static_cast<int>(e.solution->size()) <= budget) return e.solution;
          return std::nullopt;
        }
        if (budget < e.lower) return std::nullopt;
      }
    }
    Graph h = g_.induced(set);
    if (complement) h = h.complement();
    auto res = solve_oct(h, budget);
    Entry e;
    if (res) e.solution = lift(res->deleted, set);
    e.lower = budget + 1;
    std::lock_guard<std::mutex> lock(mu_);
    Entry& slot = entries_[key];
    if (e.solution || !slot.solution) {
      if (e.solution) slot.solution = e.solution;
      slot.lower = std::max(slot.lower, e.lower);
    }
    return e.solution;
  }

 private:
  struct Entry {
    int lower = 0;
    std::optional<VertexSet> solution;
  };
  const Graph& g_;
  std::mutex mu_;
  std::map<std::pair<bool, VertexSet>, Entry> entries_;
};

struct Compressor {
  const Graph& g;
  VertexSet p_i;  // old independent side
  VertexSet p_c;  // old clique side
  OctCache cache;

  Compressor(const Graph& graph, const ICPartition& rest) : g(graph), p_i(rest.p_i()), p_c(rest.p_c()), cache(graph) {}

  // Candidate sets moving from the old clique side to the new independent
  // side, given that v_c moves the other way. Only sets contained in a
  // minimal OCT of the complement of the clique side are tried: a vertex
  // whose move is not needed there can always be moved back.
  std::vector<VertexSet> clique_leavers(const VertexSet& n_i, const VertexSet& n_c, const VertexSet& v_c,
                                        int room) const {
    VertexSet b0 = set_union(set_union(p_c, n_c), v_c);
    Graph h = g.induced(b0).complement();
    VertexSet deletable;
    for (size_t i = 0; i < b0.size(); ++i)
      if (set_contains(p_c, b0[i])) deletable.push_back(static_cast<int>(i));
    std::set<VertexSet> out;
    for (const VertexSet& local : detail::minimal_octs(h, deletable, kCross + room)) {
      VertexSet m = lift(local, b0);
      for (const VertexSet& v_i : subsets_upto(m, kCross)) {
        if (static_cast<int>(m.size() - v_i.size()) > room) continue;
        if (!independent_partitionable(g, set_union(v_i, n_i), 2)) continue;
        out.insert(v_i);
      }
    }
    std::vector<VertexSet> sorted(out.begin(), out.end());
    std::sort(sorted.begin(), sorted.end(), size_lex_less);
    return sorted;
  }

  std::optional<DeletionResult> attempt(const VertexSet& y, const VertexSet& n_i, const VertexSet& n_c, int b) {
    for (const VertexSet& v_c : subsets_upto(p_i, kCross)) {
      if (!clique_partitionable(g, set_union(v_c, n_c), 2)) continue;
      VertexSet a0 = set_union(set_minus(p_i, v_c), n_i);
      auto base = cache.solve(a0, false, b);
      if (!base) continue;
      int room = b - static_cast<int>(base->size());
      for (const VertexSet& v_i : clique_leavers(n_i, n_c, v_c, room)) {
        VertexSet a = set_union(a0, v_i);
        VertexSet bset = set_minus(set_union(set_union(p_c, n_c), v_c), v_i);
        auto u = cache.solve(a, false, b);
        if (!u) continue;
        auto w = cache.solve(bset, true, b - static_cast<int>(u->size()));
        if (!w) continue;
        DeletionResult res;
        res.deleted_vertices = set_union(set_union(y, *u), *w);
        res.size = static_cast<int>(res.deleted_vertices.size());
        auto wit = ic_witness(g, set_minus(a, *u), set_minus(bset, *w), k22);
        if (!wit) throw ContractViolation("internal: compression produced an invalid partition");
        res.witness = std::move(*wit);
        return res;
      }
    }
    return std::nullopt;
  }
};

bool fits_into(const Graph& g, ICPartition& q, int v) {
  for (auto& part : q.independent_parts) {
    bool ok = std::none_of(part.begin(), part.end(), [&](int u) { return g.adjacent(u, v); });
    if (ok) {
      part.insert(std::lower_bound(part.begin(), part.end(), v), v);
      return true;
    }
  }
  for (auto& part : q.clique_parts) {
    bool ok = std::all_of(part.begin(), part.end(), [&](int u) { return g.adjacent(u, v); });
    if (ok) {
      part.insert(std::lower_bound(part.begin(), part.end(), v), v);
      return true;
    }
  }
  return false;
}

ICPartition partition_of_rest(const Graph& g, const VertexSet& s_prime) {
  VertexSet rest = set_minus(all_vertices(g.n()), s_prime);
  auto p = recognize_rl(g.induced(rest), k22);
  if (!p) throw ContractViolation("g - s_prime is not a (2,2)-graph");
  return p->lifted(rest);
}

}  // namespace

std::optional<DeletionResult> compress_vertex_22(const Graph& g, const VertexSet& s_prime, const ICPartition& rest,
                                                 int k) {
  if (k < 0) return std::nullopt;
  Compressor comp(g, rest);
  struct Guess {
    VertexSet y, n_i, n_c;
  };
  std::vector<Guess> guesses;
  for (const VertexSet& y : subsets_upto(s_prime, k)) {
    VertexSet n = set_minus(s_prime, y);
    for (const ICPartition& p : enumerate_ic_partitions(g.induced(n), k22))
      guesses.push_back({y, lift(p.p_i(), n), lift(p.p_c(), n)});
  }
  auto hit = par::first_success<DeletionResult>(guesses.size(), [&](size_t i) {
    const Guess& gs = guesses[i];
    return comp.attempt(gs.y, gs.n_i, gs.n_c, k - static_cast<int>(gs.y.size()));
  });
  if (!hit) return std::nullopt;
  return std::move(hit->second);
}

std::optional<DeletionResult> compress_vertex_22(const Graph& g, const VertexSet& s_prime, int k) {
  return compress_vertex_22(g, s_prime, partition_of_rest(g, s_prime), k);
}

std::optional<DeletionResult> solve_vertex_22(const Graph& g, int k) {
  if (k < 0) throw ContractViolation("k must be non-negative");
  const int n = g.n();
  const int start = std::min(n, k + 5);
  VertexSet prefix = all_vertices(start);
  Graph g0 = g.induced(prefix);
  VertexSet s0 = all_vertices(std::min(k + 1, start));
  ICPartition rest0 = partition_of_rest(g0, s0);
  std::optional<DeletionResult> cur;
  for (int b = 0; b <= k && !cur; ++b) cur = compress_vertex_22(g0, s0, rest0, b);
  if (!cur) return std::nullopt;
  VertexSet sol = cur->deleted_vertices;
  ICPartition q = cur->witness;
  for (int v = start; v < n; ++v) {
    prefix.push_back(v);
    Graph gi = g.induced(prefix);
    if (fits_into(gi, q, v)) continue;
    VertexSet s_prime = set_union(sol, {v});
    auto smaller = compress_vertex_22(gi, s_prime, q, static_cast<int>(sol.size()));
    if (smaller) {
      sol = smaller->deleted_vertices;
      q = smaller->witness;
    } else {
      sol = s_prime;
      if (static_cast<int>(sol.size()) > k) return std::nullopt;
    }
  }
  DeletionResult res;
  res.deleted_vertices = sol;
  res.size = static_cast<int>(sol.size());
  res.witness = q;
  return res;
}

Graph add_disjoint_clique(const Graph& g) {
  const int n = g.n();
  Graph h = g.with_extra_vertices(n + 3);
  for (int u = n; u < 2 * n + 3; ++u)
    for (int v = u + 1; v < 2 * n + 3; ++v) h.add_edge(u, v);
  return h;
}

DeletionResult strip_disjoint_clique(const DeletionResult& res, int n) {
  auto keep = [n](const VertexSet& s) {
    VertexSet out;
    for (int v : s)
      if (v < n) out.push_back(v);
    return out;
  };
  DeletionResult out;
  out.deleted_vertices = keep(res.deleted_vertices);
  out.size = static_cast<int>(out.deleted_vertices.size());
  for (const auto& part : res.witness.independent_parts) out.witness.independent_parts.push_back(keep(part));
  VertexSet clique;
  for (const auto& part : res.witness.clique_parts) {
    bool pure = std::all_of(part.begin(), part.end(), [n](int v) { return v < n; });
    if (pure && !part.empty()) {
      clique = part;
      break;
    }
  }
  out.witness.clique_parts.push_back(clique);
  return out;
}

ICPartition swap_roles(const ICPartition& p) {
  return ICPartition{p.clique_parts, p.independent_parts};
}

std::optional<DeletionResult> solve_vertex_21(const Graph& g, int k) {
  if (k < 0 || k > g.n()) throw ContractViolation("solve_vertex_21 needs 0 <= k <= n");
  auto res = solve_vertex_22(add_disjoint_clique(g), k);
  if (!res) return std::nullopt;
  return strip_disjoint_clique(*res, g.n());
}

std::optional<DeletionResult> solve_vertex_12(const Graph& g, int k) {
  auto res = solve_vertex_21(g.complement(), k);
  if (!res) return std::nullopt;
  res->witness = swap_roles(res->witness);
  return res;
}

std::optional<DeletionResult> solve_vertex(const Graph& g, RLParams params, int k) {
  if (params == RLParams{2, 2}) return solve_vertex_22(g, k);
  if (params == RLParams{2, 1}) return solve_vertex_21(g, k);
  if (params == RLParams{1, 2}) return solve_vertex_12(g, k);
  throw ContractViolation("vertex solver supports (2,2), (2,1) and (1,2)");
}

}  // namespace rlpart

#include "rlpart/approx.hpp"

#include <algorithm>

#include "rlpart/oct.hpp"
#include "rlpart/recognition.hpp"
#include "rlpart/vertex_partization.hpp"

namespace rlpart {

namespace {

constexpr RLParams k22{2, 2};

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

std::optional<ApproxResult> approx_22_uncapped(const Graph& g, int k, const OctApproximator& oracle,
                                               const ApproxOptions& options) {
  if (k < 0) throw ContractViolation("k must be non-negative");
  Packing pack = pack_obstructions(g, k, k22, options.obstruction_cap);
  if (pack.too_many) return std::nullopt;
  ApproxResult out;
  VertexSet packed;
  for (const Obstruction& o : pack.obstructions) {
    packed = set_union(packed, o.vertices);
    out.largest_obstruction = std::max(out.largest_obstruction, static_cast<int>(o.vertices.size()));
  }
  out.obstruction_count = static_cast<int>(pack.obstructions.size());

  const VertexSet& rest = pack.rest_vertices;
  Graph h = g.induced(rest);
  auto sp = split_partition(h, k22);
  if (!sp) throw ContractViolation("internal: packing left a non-split graph");
  const int cross = k22.r * k22.l;
  auto us = subsets_upto(sp->v2, cross);
  auto ws = subsets_upto(sp->v1, cross);
  // Ascending budgets keep each oracle answer within the optimum once the
  // loop reaches it.
  for (int b = 0; b <= k; ++b)
    for (const VertexSet& u : us)
      for (const VertexSet& w : ws) {
        VertexSet v1 = set_minus(set_union(sp->v1, u), w);
        VertexSet v2 = set_minus(set_union(sp->v2, w), u);
        auto s1 = oracle.solve(h.induced(v1), b);
        if (!s1) continue;
        auto s2 = oracle.solve(h.induced(v2).complement(), b);
        if (!s2) continue;
        VertexSet d1 = lift(*s1, v1), d2 = lift(*s2, v2);
        VertexSet keep1 = lift(set_minus(v1, d1), rest), keep2 = lift(set_minus(v2, d2), rest);
        auto wit = ic_witness(g, keep1, keep2, k22);
        if (!wit) throw ContractViolation("oracle " + oracle.name + " returned a set that is not an OCT");
        out.result.deleted_vertices = set_union(packed, set_union(lift(d1, rest), lift(d2, rest)));
        out.result.size = static_cast<int>(out.result.deleted_vertices.size());
        out.result.witness = std::move(*wit);
        return out;
      }
  return std::nullopt;
}

// Parts are disjoint, cover exactly `keep` and have the right shape.
bool witness_covers(const Graph& g, const VertexSet& keep, const ICPartition& w) {
  VertexSet seen;
  size_t total = 0;
  for (const auto& part : w.independent_parts) {
    if (!is_independent(g, part)) return false;
    seen = set_union(seen, part);
    total += part.size();
  }
  for (const auto& part : w.clique_parts) {
    if (!is_clique(g, part)) return false;
    seen = set_union(seen, part);
    total += part.size();
  }
  return total == seen.size() && seen == keep;
}

void check_cap(const Graph& g, const ApproxOptions& options) {
  if (g.n() > options.max_n) throw CapExceeded("approx.max_n", options.max_n, g.n());
}

}  // namespace

OctApproximator exact_oct_oracle() {
  return {"exact", [](const Graph& g, int k) -> std::optional<VertexSet> {
            auto r = solve_oct(g, k);
            if (!r) return std::nullopt;
            return r->deleted;
          }};
}

std::optional<Obstruction> find_split_obstruction(const Graph& g, RLParams params, int cap) {
  if (split_partition(g, params)) return std::nullopt;
  // One descending pass suffices: a vertex kept once stays needed because
  // split graphs are closed under taking induced subgraphs.
  VertexSet cur = all_vertices(g.n());
  for (int v = g.n() - 1; v >= 0; --v) {
    VertexSet smaller = set_minus(cur, {v});
    if (!split_partition(g.induced(smaller), params)) cur = std::move(smaller);
  }
  if (static_cast<int>(cur.size()) > cap) throw CapExceeded("obstruction_cap", cap, static_cast<long long>(cur.size()));
  return Obstruction{cur, true};
}

Packing pack_obstructions(const Graph& g, int k, RLParams params, int cap) {
  Packing out;
  out.rest_vertices = all_vertices(g.n());
  while (true) {
    auto ob = find_split_obstruction(g.induced(out.rest_vertices), params, cap);
    if (!ob) return out;
    VertexSet found = lift(ob->vertices, out.rest_vertices);
    out.rest_vertices = set_minus(out.rest_vertices, found);
    out.obstructions.push_back(Obstruction{found, ob->minimal});
    if (static_cast<int>(out.obstructions.size()) > k) {
      out.too_many = true;
      return out;
    }
  }
}

std::optional<ApproxResult> approx_vertex_22(const Graph& g, int k, const OctApproximator& oracle,
                                             const ApproxOptions& options) {
  check_cap(g, options);
  return approx_22_uncapped(g, k, oracle, options);
}

std::optional<ApproxResult> approx_vertex_21(const Graph& g, int k, const OctApproximator& oracle,
                                             const ApproxOptions& options) {
  if (k < 0 || k > g.n()) throw ContractViolation("approx_vertex_21 needs 0 <= k <= n");
  check_cap(g, options);
  auto res = approx_22_uncapped(add_disjoint_clique(g), k, oracle, options);
  if (!res) return std::nullopt;
  DeletionResult stripped = strip_disjoint_clique(res->result, g.n());
  VertexSet keep = set_minus(all_vertices(g.n()), stripped.deleted_vertices);
  if (!witness_covers(g, keep, stripped.witness)) {
    // Too few clique vertices survived to pin down the clique part.
    auto p = recognize_rl(g.induced(keep), RLParams{2, 1});
    if (!p) throw ContractViolation("internal: stripped approximation is not (2,1)");
    stripped.witness = p->lifted(keep);
  }
  res->result = std::move(stripped);
  return res;
}

std::optional<ApproxResult> approx_vertex_12(const Graph& g, int k, const OctApproximator& oracle,
                                             const ApproxOptions& options) {
  auto res = approx_vertex_21(g.complement(), k, oracle, options);
  if (!res) return std::nullopt;
  res->result.witness = swap_roles(res->result.witness);
  return res;
}

std::optional<ApproxResult> approx_vertex(const Graph& g, RLParams params, int k, const OctApproximator& oracle,
                                          const ApproxOptions& options) {
  if (params == RLParams{2, 2}) return approx_vertex_22(g, k, oracle, options);
  if (params == RLParams{2, 1}) return approx_vertex_21(g, k, oracle, options);
  if (params == RLParams{1, 2}) return approx_vertex_12(g, k, oracle, options);
  throw ContractViolation("approximation supports (2,2), (2,1) and (1,2)");
}

}  // namespace rlpart

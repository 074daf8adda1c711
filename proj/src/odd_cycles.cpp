#include "odd_cycles.hpp"

#include <algorithm>

namespace rlpart::detail {

std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g, const std::vector<char>& alive) {
  const int n = g.n();
  std::vector<int> dist(n), parent(n);
  std::vector<int> queue;
  int best_len = n + 1;
  std::vector<int> best;
  for (int root = 0; root < n; ++root) {
    if (!alive[root]) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    queue.assign(1, root);
    for (size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      if (2 * dist[u] + 1 >= best_len) break;
      for (int w : g.neighbors(u)) {
        if (!alive[w]) continue;
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (dist[w] == dist[u] && 2 * dist[u] + 1 < best_len) {
          std::vector<int> a, b;
          for (int x = u; x != -1; x = parent[x]) a.push_back(x);
          for (int x = w; x != -1; x = parent[x]) b.push_back(x);
          // Both paths end at root; drop the shared tail except its first vertex.
          while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
            a.pop_back();
            b.pop_back();
          }
          b.pop_back();
          std::vector<int> cyc = a;
          cyc.insert(cyc.end(), b.rbegin(), b.rend());
          if (static_cast<int>(cyc.size()) % 2 == 1 && static_cast<int>(cyc.size()) < best_len) {
            best_len = static_cast<int>(cyc.size());
            best = std::move(cyc);
          }
        }
      }
    }
  }
  if (best.empty()) return std::nullopt;
  return best;
}

namespace {

bool bipartite_without(const Graph& g, std::vector<char> alive, const VertexSet& removed) {
  for (int v : removed) alive[v] = 0;
  std::vector<int> color(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (!alive[s] || color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (!alive[w]) continue;
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

}  // namespace

std::vector<VertexSet> minimal_octs(const Graph& g, const VertexSet& deletable, int max_size) {
  std::vector<char> can(g.n(), 0);
  for (int v : deletable) can[v] = 1;
  std::set<VertexSet> found;
  std::vector<char> alive(g.n(), 1);
  VertexSet cur;
  auto rec = [&](auto&& self) -> void {
    auto cyc = shortest_odd_cycle(g, alive);
    if (!cyc) {
      VertexSet s = cur;
      std::sort(s.begin(), s.end());
      found.insert(std::move(s));
      return;
    }
    if (static_cast<int>(cur.size()) >= max_size) return;
    std::vector<int> options;
    for (int v : *cyc)
      if (can[v]) options.push_back(v);
    std::sort(options.begin(), options.end());
    for (int v : options) {
      alive[v] = 0;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      alive[v] = 1;
    }
  };
  rec(rec);
  std::vector<VertexSet> out;
  std::vector<char> all_alive(g.n(), 1);
  for (const VertexSet& s : found) {
    bool minimal = true;
    for (size_t i = 0; i < s.size() && minimal; ++i) {
      VertexSet smaller = s;
      smaller.erase(smaller.begin() + static_cast<long>(i));
      if (bipartite_without(g, all_alive, smaller)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace rlpart::detail

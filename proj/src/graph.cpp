#include "rlpart/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

namespace rlpart {

CapExceeded::CapExceeded(std::string cap, long long limit, long long value)
    : std::runtime_error("cap exceeded: " + cap + " (limit " + std::to_string(limit) + ", got " +
                         std::to_string(value) + ")"),
      cap_(std::move(cap)) {}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw ContractViolation("negative vertex count");
  rows_.assign(static_cast<size_t>(n) * words_, 0);
  adj_.resize(n);
  labels_.resize(n);
  for (int v = 0; v < n; ++v) labels_[v] = v;
}

Graph Graph::from_edges(int n, const EdgeSet& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw ContractViolation("edge endpoint out of range");
  if (u == v) throw ContractViolation("self-loop");
  if (adjacent(u, v)) return;
  rows_[static_cast<size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[static_cast<size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& set) const {
  Graph h(static_cast<int>(set.size()));
  std::vector<int> pos(n_, -1);
  for (size_t i = 0; i < set.size(); ++i) pos[set[i]] = static_cast<int>(i);
  for (size_t i = 0; i < set.size(); ++i) {
    h.labels_[i] = labels_[set[i]];
    for (int w : adj_[set[i]]) {
      int j = pos[w];
      if (j > static_cast<int>(i)) h.add_edge(static_cast<int>(i), j);
    }
  }
  return h;
}

Graph Graph::without(const VertexSet& removed) const {
  return induced(set_minus(all_vertices(n_), removed));
}

Graph Graph::without_edges(const EdgeSet& removed) const {
  Graph h(n_);
  h.labels_ = labels_;
  for (const Edge& e : edges())
    if (!std::binary_search(removed.begin(), removed.end(), e)) h.add_edge(e.first, e.second);
  return h;
}

Graph Graph::complement() const {
  Graph h(n_);
  h.labels_ = labels_;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph Graph::with_extra_vertices(int extra) const {
  Graph h(n_ + extra);
  for (int v = 0; v < n_; ++v) h.labels_[v] = labels_[v];
  for (int v = n_; v < n_ + extra; ++v) h.labels_[v] = -1;
  for (const Edge& e : edges()) h.add_edge(e.first, e.second);
  return h;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && rows_ == other.rows_;
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty() || tokens(lines[0]).size() != 2)
    throw ParseError(1, "malformed header, expected \"n m\"");
  auto head = tokens(lines[0]);
  long long n = 0, m = 0;
  if (!parse_int(head[0], n) || !parse_int(head[1], m) || n < 0 || m < 0)
    throw ParseError(1, "malformed header, expected \"n m\"");
  if (n > 1'000'000) throw ParseError(1, "vertex count too large");
  Graph g(static_cast<int>(n));
  long long seen = 0;
  for (size_t li = 1; li < lines.size(); ++li) {
    int lineno = static_cast<int>(li) + 1;
    auto tok = tokens(lines[li]);
    if (tok.empty()) continue;
    if (seen == m) throw ParseError(lineno, "more edge lines than declared");
    long long u = 0, v = 0;
    if (tok.size() != 2 || !parse_int(tok[0], u) || !parse_int(tok[1], v))
      throw ParseError(lineno, "malformed edge line, expected \"u v\"");
    if (u < 0 || u >= n) throw ParseError(lineno, "vertex " + std::to_string(u) + " out of range");
    if (v < 0 || v >= n) throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
    if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  if (seen != m)
    throw ParseError(static_cast<int>(lines.size()),
                     "expected " + std::to_string(m) + " edge lines, found " + std::to_string(seen));
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

Graph complement(const Graph& g) { return g.complement(); }

std::optional<Bipartition> is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  std::vector<int> queue;
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < g.n(); ++v) (color[v] == 0 ? b.left : b.right).push_back(v);
  return b;
}

std::pair<std::vector<int>, int> degeneracy_order(const Graph& g) {
  int n = g.n();
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> order;
  int best = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    best = std::max(best, deg[pick]);
    gone[pick] = 1;
    order.push_back(pick);
    for (int w : g.neighbors(pick))
      if (!gone[w]) --deg[w];
  }
  return {order, best};
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

struct FlowNet {
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;

  explicit FlowNet(int nodes) : out(nodes) {}

  void add(int u, int v, int cap, int back_cap = 0) {
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, back_cap});
  }

  // Augments unit by unit (all finite capacities here are 1). Returns the
  // flow value, or limit+1 once the limit is exceeded.
  int maxflow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> pred(out.size());
    std::vector<int> queue;
    while (true) {
      std::fill(pred.begin(), pred.end(), -1);
      pred[s] = -2;
      queue.assign(1, s);
      bool found = false;
      for (size_t h = 0; h < queue.size() && !found; ++h) {
        int u = queue[h];
        for (int a : out[u]) {
          int v = arcs[a].to;
          if (arcs[a].cap > 0 && pred[v] == -1) {
            pred[v] = a;
            if (v == t) {
              found = true;
              break;
            }
            queue.push_back(v);
          }
        }
      }
      if (!found) return flow;
      int bottleneck = kInf;
      for (int v = t; v != s; v = arcs[pred[v] ^ 1].to) bottleneck = std::min(bottleneck, arcs[pred[v]].cap);
      for (int v = t; v != s; v = arcs[pred[v] ^ 1].to) {
        arcs[pred[v]].cap -= bottleneck;
        arcs[pred[v] ^ 1].cap += bottleneck;
      }
      flow += bottleneck;
      if (limit >= 0 && flow > limit) return flow;
    }
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(out.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a : out[u]) {
        int v = arcs[a].to;
        if (arcs[a].cap > 0 && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    return seen;
  }
};

void check_disjoint(int n, std::initializer_list<const VertexSet*> sets) {
  std::vector<char> mark(n, 0);
  for (const VertexSet* s : sets)
    for (int v : *s) {
      if (v < 0 || v >= n) throw ContractViolation("vertex out of range");
      if (mark[v]) throw ContractViolation("cut input sets overlap");
      mark[v] = 1;
    }
}

}  // namespace

VertexCut min_vertex_cut(const Graph& g, const VertexSet& s_side, const VertexSet& t_side,
                         const VertexSet& removed, const VertexSet& fixed, int limit) {
  int n = g.n();
  check_disjoint(n, {&s_side, &t_side, &removed});
  // 0 deletable, 1 source side, 2 sink side, 3 removed, 4 undeletable
  std::vector<char> kind(n, 0);
  for (int v : fixed) kind[v] = 4;
  for (int v : removed) kind[v] = 3;
  for (int v : s_side) kind[v] = 1;
  for (int v : t_side) kind[v] = 2;
  VertexCut result;
  if (s_side.empty() || t_side.empty()) return result;

  // A path whose every vertex is undeletable cannot be cut.
  std::vector<char> seen(n, 0);
  std::vector<int> stack(s_side.begin(), s_side.end());
  for (int v : s_side) seen[v] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (seen[w] || kind[w] == 0 || kind[w] == 3) continue;
      if (kind[w] == 2) {
        result.status = VertexCut::Status::Inseparable;
        return result;
      }
      seen[w] = 1;
      stack.push_back(w);
    }
  }

  int source = 2 * n, sink = 2 * n + 1;
  FlowNet net(2 * n + 2);
  for (int v = 0; v < n; ++v) {
    if (kind[v] == 3) continue;
    net.add(2 * v, 2 * v + 1, kind[v] == 0 ? 1 : kInf);
    if (kind[v] == 1) net.add(source, 2 * v, kInf);
    if (kind[v] == 2) net.add(2 * v + 1, sink, kInf);
    for (int w : g.neighbors(v))
      if (kind[w] != 3) net.add(2 * v + 1, 2 * w, kInf);
  }
  int flow = net.maxflow(source, sink, limit);
  if (limit >= 0 && flow > limit) {
    result.status = VertexCut::Status::OverLimit;
    return result;
  }
  auto reach = net.reachable(source);
  for (int v = 0; v < n; ++v)
    if (kind[v] == 0 && reach[2 * v] && !reach[2 * v + 1]) result.cut.push_back(v);
  return result;
}

EdgeCut min_edge_cut(const Graph& g, const VertexSet& s_side, const VertexSet& t_side, int limit) {
  int n = g.n();
  check_disjoint(n, {&s_side, &t_side});
  EdgeCut result;
  if (s_side.empty() || t_side.empty()) return result;
  int source = n, sink = n + 1;
  FlowNet net(n + 2);
  for (auto [u, v] : g.edges()) net.add(u, v, 1, 1);
  for (int v : s_side) net.add(source, v, kInf);
  for (int v : t_side) net.add(v, sink, kInf);
  int flow = net.maxflow(source, sink, limit);
  if (limit >= 0 && flow > limit) {
    result.status = EdgeCut::Status::OverLimit;
    return result;
  }
  auto reach = net.reachable(source);
  for (auto [u, v] : g.edges())
    if (reach[u] != reach[v]) result.cut.emplace_back(u, v);
  return result;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& a, int v) { return std::binary_search(a.begin(), a.end(), v); }

bool is_independent(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

VertexSet all_vertices(int n) {
  VertexSet out(n);
  for (int v = 0; v < n; ++v) out[v] = v;
  return out;
}

VertexSet lift(const VertexSet& local, const VertexSet& host) {
  VertexSet out;
  out.reserve(local.size());
  for (int v : local) out.push_back(host[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rlpart

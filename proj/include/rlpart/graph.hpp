#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rlpart {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;
// Unordered pair stored with first < second.
using Edge = std::pair<int, int>;
// Sorted, duplicate-free list of edges.
using EdgeSet = std::vector<Edge>;

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap, long long limit, long long value);
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertices 0..n-1. Each vertex carries a label;
// derived graphs inherit labels from their parent, fresh vertices get -1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const EdgeSet& edges);

  int n() const { return n_; }
  int m() const { return m_; }

  bool adjacent(int u, int v) const {
    return (rows_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  const std::vector<int>& neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }
  // Bitset row of u: words() 64-bit words.
  const std::uint64_t* row(int u) const { return rows_.data() + static_cast<size_t>(u) * words_; }
  int words() const { return words_; }

  EdgeSet edges() const;
  const std::vector<int>& labels() const { return labels_; }
  int label(int v) const { return labels_[v]; }

  // Builder-style mutation, only meant for use while constructing a graph.
  void add_edge(int u, int v);
  void set_label(int v, int label) { labels_[v] = label; }

  // Vertex i of the result is vertex set[i] of this graph.
  Graph induced(const VertexSet& set) const;
  Graph without(const VertexSet& removed) const;
  Graph without_edges(const EdgeSet& removed) const;
  Graph complement() const;
  // Adds `extra` isolated vertices with label -1.
  Graph with_extra_vertices(int extra) const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> labels_;
};

Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);
Graph read_edge_list_file(const std::string& path);

Graph complement(const Graph& g);
std::optional<Bipartition> is_bipartite(const Graph& g);
// Repeated minimum-degree removal. Returns the removal order and the degeneracy.
std::pair<std::vector<int>, int> degeneracy_order(const Graph& g);

struct VertexCut {
  enum class Status { Ok, Inseparable, OverLimit };
  Status status = Status::Ok;
  VertexSet cut;
  bool ok() const { return status == Status::Ok; }
};

// Minimum (S,T)-vertex cut in g - removed. Vertices in `fixed` may not be cut.
// The returned cut is the one closest to s_side. With a limit, gives up as
// soon as the cut is known to be larger than the limit.
VertexCut min_vertex_cut(const Graph& g, const VertexSet& s_side, const VertexSet& t_side,
                         const VertexSet& removed, const VertexSet& fixed = {},
                         int limit = -1);

struct EdgeCut {
  enum class Status { Ok, Inseparable, OverLimit };
  Status status = Status::Ok;
  EdgeSet cut;
  bool ok() const { return status == Status::Ok; }
};

// Minimum set of edges separating s_side from t_side; closest to s_side.
EdgeCut min_edge_cut(const Graph& g, const VertexSet& s_side, const VertexSet& t_side,
                     int limit = -1);

// Set helpers used throughout the library.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, int v);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
VertexSet all_vertices(int n);
// Maps a set of vertices of induced(host) back to host ids.
VertexSet lift(const VertexSet& local, const VertexSet& host);

}  // namespace rlpart

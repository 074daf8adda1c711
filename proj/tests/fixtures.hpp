#pragma once

#include <initializer_list>
#include <vector>

#include "rlpart/graph.hpp"

namespace fx {

using rlpart::Graph;

inline Graph edges(int n, std::initializer_list<std::pair<int, int>> list) {
  Graph g(n);
  for (auto [u, v] : list) g.add_edge(u, v);
  return g;
}

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph clique(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Center 0, leaves 1..leaves.
inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

inline Graph disjoint(const std::vector<Graph>& parts) {
  int n = 0;
  for (const Graph& p : parts) n += p.n();
  Graph g(n);
  int base = 0;
  for (const Graph& p : parts) {
    for (auto [u, v] : p.edges()) g.add_edge(base + u, base + v);
    base += p.n();
  }
  return g;
}

inline Graph copies(const Graph& g, int count) { return disjoint(std::vector<Graph>(count, g)); }

}  // namespace fx

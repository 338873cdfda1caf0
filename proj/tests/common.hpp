// Shared fixtures and conversions for the test suite.
#pragma once

#include <utility>
#include <vector>

#include "domina/graph.hpp"
#include "oracles.hpp"

namespace testing_support {

inline domina::Graph to_lib(const oracle::OGraph& o) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < o.n; ++u)
    for (int v = u + 1; v < o.n; ++v)
      if (o.adj[u][v]) edges.emplace_back(u, v);
  return domina::Graph::from_edges(o.n, edges);
}

inline domina::Graph cycle(int n) { return to_lib(oracle::cycle(n)); }
inline domina::Graph path(int n) { return to_lib(oracle::path(n)); }

inline domina::Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return domina::Graph::from_edges(n, edges);
}

inline domina::Graph empty(int n) { return domina::Graph::from_edges(n, {}); }

// K_{1,m}: vertex 0 is the center.
inline domina::Graph star(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= m; ++v) edges.emplace_back(0, v);
  return domina::Graph::from_edges(m + 1, edges);
}

inline domina::Graph petersen() {
  return domina::Graph::from_edges(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},      // outer 5-cycle
           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},      // inner 5-cycle (pentagram)
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});    // spokes
}

}  // namespace testing_support

// Deliberately naive reference implementations used to cross-check the
// library: plain adjacency-matrix loops, full 2^n subset enumeration, and
// Floyd-Warshall distances. Nothing here shares code with src/.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "domina/graph.hpp"

namespace oracle {

constexpr int kInf = 1 << 20;

struct OGraph {
  int n = 0;
  std::vector<std::vector<char>> adj;  // symmetric, zero diagonal

  explicit OGraph(int order) : n(order), adj(order, std::vector<char>(order, 0)) {}

  static OGraph from(const domina::Graph& g) {
    OGraph o(g.order());
    for (int u = 0; u < o.n; ++u)
      for (int v = 0; v < o.n; ++v)
        if (u != v && g.adjacent(u, v)) o.adj[u][v] = 1;
    return o;
  }

  void add_edge(int u, int v) { adj[u][v] = adj[v][u] = 1; }
};

inline bool mask_has(std::uint32_t mask, int v) { return (mask >> v) & 1u; }

// Every vertex outside the mask has a neighbor inside it.
inline bool dominates(const OGraph& g, std::uint32_t mask) {
  for (int v = 0; v < g.n; ++v) {
    if (mask_has(mask, v)) continue;
    bool hit = false;
    for (int u = 0; u < g.n && !hit; ++u)
      if (mask_has(mask, u) && g.adj[u][v]) hit = true;
    if (!hit) return false;
  }
  return true;
}

// Every vertex of the graph (members included) has a neighbor in the mask.
inline bool totally_dominates(const OGraph& g, std::uint32_t mask) {
  for (int v = 0; v < g.n; ++v) {
    bool hit = false;
    for (int u = 0; u < g.n && !hit; ++u)
      if (mask_has(mask, u) && g.adj[u][v]) hit = true;
    if (!hit) return false;
  }
  return true;
}

// Is the induced subgraph on the mask connected (and nonempty)?
inline bool induces_connected(const OGraph& g, std::uint32_t mask) {
  if (mask == 0) return false;
  int start = 0;
  while (!mask_has(mask, start)) ++start;
  std::vector<int> stack{start};
  std::uint32_t seen = 1u << start;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < g.n; ++u)
      if (mask_has(mask, u) && !mask_has(seen, u) && g.adj[v][u]) {
        seen |= 1u << u;
        stack.push_back(u);
      }
  }
  return seen == mask;
}

inline int popcount32(std::uint32_t x) {
  int c = 0;
  for (; x; x &= x - 1) ++c;
  return c;
}

// Minimum over all subsets; -1 when no subset qualifies.
template <typename Pred>
int min_subset(const OGraph& g, Pred&& ok) {
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask)
    if (ok(mask)) {
      const int c = popcount32(mask);
      if (best < 0 || c < best) best = c;
    }
  return best;
}

inline int gamma(const OGraph& g) {
  return min_subset(g, [&](std::uint32_t m) { return dominates(g, m); });
}

inline int gamma_total(const OGraph& g) {
  return min_subset(g, [&](std::uint32_t m) { return totally_dominates(g, m); });
}

inline int gamma_connected(const OGraph& g) {
  return min_subset(
      g, [&](std::uint32_t m) { return dominates(g, m) && induces_connected(g, m); });
}

// All-pairs distances by Floyd-Warshall (the library uses BFS).
inline std::vector<std::vector<int>> distances(const OGraph& g) {
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, kInf));
  for (int v = 0; v < g.n; ++v) d[v][v] = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (g.adj[u][v]) d[u][v] = 1;
  for (int k = 0; k < g.n; ++k)
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

struct OMetrics {
  std::vector<int> ecc;  // kInf marks unreachable
  int radius = kInf;
  int diameter = 0;
  bool connected = true;
};

inline OMetrics metrics(const OGraph& g) {
  OMetrics m;
  const auto d = distances(g);
  for (int v = 0; v < g.n; ++v) {
    int e = 0;
    for (int u = 0; u < g.n; ++u) e = std::max(e, d[v][u]);
    m.ecc.push_back(e);
    m.radius = std::min(m.radius, e);
    m.diameter = std::max(m.diameter, e);
    if (e >= kInf) m.connected = false;
  }
  if (g.n == 0) m.connected = true;
  return m;
}

// Builds the graph whose edges are the set bits of an edge mask in
// lexicographic pair order (0,1),(0,2),...,(n-2,n-1).
inline OGraph from_edge_mask(int n, std::uint64_t mask) {
  OGraph g(n);
  int bit = 0;
  for (int u = 0; u + 1 < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1u) g.add_edge(u, v);
  return g;
}

inline OGraph complement(const OGraph& g) {
  OGraph c(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (u != v) c.adj[u][v] = !g.adj[u][v];
  return c;
}

inline OGraph path(int n) {
  OGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline OGraph cycle(int n) {
  if (n < 3) return path(n);  // avoid a degenerate self-loop
  OGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

}  // namespace oracle

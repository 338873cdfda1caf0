#include "domina/graph.hpp"

#include <string>

#include "domina/error.hpp"

namespace domina {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > kMaxVertices)
    fail(Errc::UnsupportedOrder, "order " + std::to_string(n) + " outside [0, " +
                                     std::to_string(kMaxVertices) + "]");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::InvalidVertex, "edge endpoint out of range for order " + std::to_string(n));
    if (u == v) fail(Errc::LoopRejected, "loop at vertex " + std::to_string(u));
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  return g;
}

Graph Graph::from_adjacency(int n, std::vector<VertexSet> rows) {
  assert(n >= 0 && n <= kMaxVertices);
  assert(static_cast<int>(rows.size()) == n);
#ifndef NDEBUG
  for (int v = 0; v < n; ++v) {
    assert(rows[v].universe() == n);
    assert(!rows[v].test(v));
    for (int u : rows[v]) assert(rows[u].test(v));
  }
#endif
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(rows);
  return g;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].count();
  return twice / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v)
    if (degree(v) > d) d = degree(v);
  return d;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < n_; ++v)
    if (adj_[v].empty()) return true;
  return false;
}

Graph Graph::complement() const {
  std::vector<VertexSet> rows(n_, VertexSet(n_));
  const VertexSet all = VertexSet::full(n_);
  for (int v = 0; v < n_; ++v) {
    rows[v] = all - adj_[v];
    rows[v].reset(v);
  }
  return from_adjacency(n_, std::move(rows));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  assert(s.universe() == g.order());
  InducedSubgraph out;
  out.to_new.assign(g.order(), -1);
  for (int v : s) {
    out.to_new[v] = static_cast<int>(out.to_old.size());
    out.to_old.push_back(v);
  }
  const int m = static_cast<int>(out.to_old.size());
  std::vector<VertexSet> rows(m, VertexSet(m));
  for (int i = 0; i < m; ++i) {
    const VertexSet nb = g.neighbors(out.to_old[i]) & s;
    for (int v : nb) rows[i].set(out.to_new[v]);
  }
  out.graph = Graph::from_adjacency(m, std::move(rows));
  return out;
}

Metrics metrics(const Graph& g) {
  const int n = g.order();
  Metrics m;
  m.ecc.resize(n);
  for (int v = 0; v < n; ++v) {
    // Level-synchronous BFS over bitset rows.
    VertexSet visited(n), frontier(n);
    visited.set(v);
    frontier.set(v);
    int depth = 0;
    while (true) {
      VertexSet next(n);
      for (int u : frontier) next |= g.neighbors(u);
      next -= visited;
      if (next.empty()) break;
      ++depth;
      visited |= next;
      frontier = next;
    }
    if (visited.count() == n)
      m.ecc[v] = depth;
    else
      m.ecc[v] = std::nullopt;  // some vertex unreachable
  }
  for (int v = 0; v < n; ++v) {
    if (!m.ecc[v].has_value()) {
      m.radius = std::nullopt;
      m.diameter = std::nullopt;
      return m;
    }
    const int e = *m.ecc[v];
    if (!m.radius || e < *m.radius) m.radius = e;
    if (!m.diameter || e > *m.diameter) m.diameter = e;
  }
  return m;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> comps;
  VertexSet seen(n);
  for (int v = 0; v < n; ++v) {
    if (seen.test(v)) continue;
    VertexSet comp(n), frontier(n);
    comp.set(v);
    frontier.set(v);
    while (!frontier.empty()) {
      VertexSet next(n);
      for (int u : frontier) next |= g.neighbors(u);
      next -= comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace domina

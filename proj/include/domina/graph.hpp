#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "domina/bitset.hpp"

namespace domina {

// Immutable simple undirected graph on vertices 0..n-1 with bit-vector
// adjacency rows (open neighborhoods). Symmetric, loop-free.
class Graph {
 public:
  Graph() = default;  // order 0

  // Builds from an unordered edge list; duplicate pairs collapse.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  // Adopts prebuilt rows; asserts symmetry and irreflexivity.
  static Graph from_adjacency(int n, std::vector<VertexSet> rows);

  int order() const { return n_; }
  long long edge_count() const;

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighborhood(int v) const {
    VertexSet s = adj_[v];
    s.set(v);
    return s;
  }

  int degree(int v) const { return adj_[v].count(); }
  int max_degree() const;
  bool has_isolated_vertex() const;

  VertexSet vertex_set() const { return VertexSet::full(n_); }

  Graph complement() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// Result of restricting a graph to a vertex subset. Vertices are relabeled
// in ascending order of their old index.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_new;  // old vertex -> new index, -1 if dropped
  std::vector<int> to_old;  // new index -> old vertex
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Per-vertex eccentricities plus radius and diameter. nullopt marks the
// infinite value taken on disconnected graphs (and on the order-0 graph).
struct Metrics {
  std::vector<std::optional<int>> ecc;
  std::optional<int> radius;
  std::optional<int> diameter;
};

Metrics metrics(const Graph& g);

// Maximal connected pieces, ordered by minimum member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace domina

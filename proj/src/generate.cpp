#include "domina/generate.hpp"

#include <cmath>

#include "domina/error.hpp"

namespace domina {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  // Rejection sampling on the top range keeps the draw unbiased.
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0 || n > kMaxVertices)
    fail(Errc::UnsupportedOrder, "order " + std::to_string(n) + " outside [0, " +
                                     std::to_string(kMaxVertices) + "]");
  if (!(p >= 0.0 && p <= 1.0))
    fail(Errc::InvalidProbability, "p = " + std::to_string(p) + " outside [0, 1]");

  std::vector<VertexSet> rows(n, VertexSet(n));
  if (p > 0.0) {
    const bool always = p >= 1.0;
    const std::uint64_t threshold =
        always ? 0 : static_cast<std::uint64_t>(std::ldexp(p, 64));
    SplitMix64 rng(seed);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const std::uint64_t draw = rng.next();
        if (always || draw < threshold) {
          rows[u].set(v);
          rows[v].set(u);
        }
      }
    }
  }
  return Graph::from_adjacency(n, std::move(rows));
}

int edge_pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<VertexSet> rows(n, VertexSet(n));
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) {
        rows[u].set(v);
        rows[v].set(u);
      }
    }
  }
  return Graph::from_adjacency(n, std::move(rows));
}

std::uint64_t labeled_graph_count(int n) { return std::uint64_t{1} << edge_pair_count(n); }

LabeledGraphs::LabeledGraphs(int n, bool connected_only)
    : n_(n), connected_only_(connected_only) {
  if (n < 0 || n > 8)
    fail(Errc::EnumerationTooLarge,
         "labeled enumeration capped at n <= 8, got n = " + std::to_string(n));
  total_ = labeled_graph_count(n);
}

bool LabeledGraphs::next(Graph& out) {
  while (mask_ < total_) {
    out = graph_from_edge_mask(n_, mask_++);
    if (!connected_only_ || is_connected(out)) return true;
  }
  return false;
}

}  // namespace domina

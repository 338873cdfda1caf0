#pragma once

#include <cstdint>

#include "domina/graph.hpp"

namespace domina {

// Sebastiano Vigna's splitmix64 (public domain). Fixed here so that seeded
// runs reproduce bit-for-bit across platforms and reimplementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound).
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// G(n,p): each unordered pair {u,v}, visited in row-major order
// (u ascending, then v ascending), is kept iff the next splitmix64 draw is
// below floor(p * 2^64). p=0 and p=1 short-circuit exactly.
Graph random_gnp(int n, double p, std::uint64_t seed);

// Pair {u,v}, u < v, mapped to its rank in lexicographic order:
// (0,1), (0,2), ..., (0,n-1), (1,2), ...
int edge_pair_count(int n);

// Graph of order n whose edges are the set bits of mask under the
// lexicographic pair ranking above.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

std::uint64_t labeled_graph_count(int n);

// Streams all 2^(n(n-1)/2) labeled graphs of order n in ascending edge-mask
// order, optionally filtered to connected graphs. Capped at n <= 8 (2^28
// masks); larger orders raise EnumerationTooLarge.
class LabeledGraphs {
 public:
  LabeledGraphs(int n, bool connected_only);

  // Emits the next graph; false when the stream is exhausted.
  bool next(Graph& out);

 private:
  int n_;
  bool connected_only_;
  std::uint64_t mask_ = 0;
  std::uint64_t total_;
};

}  // namespace domina

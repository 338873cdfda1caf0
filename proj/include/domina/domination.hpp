#pragma once

#include "domina/graph.hpp"

namespace domina {

enum class DominationVariant { PLAIN, TOTAL, CONNECTED };

const char* to_string(DominationVariant v);

// Exact domination value together with a witness attaining it. The witness
// always re-passes its variant's predicate.
struct DominationCertificate {
  DominationVariant variant;
  int value;
  VertexSet witness;
};

// n/(1+max degree) rounded up, and n - max degree.
struct DegreeBounds {
  int lower;
  int upper;
};

// True iff the closed neighborhoods of d cover every vertex.
bool is_dominating(const Graph& g, const VertexSet& d);

// Dominating and G[d] has no isolated vertex (equivalently, the open
// neighborhoods of d cover every vertex).
bool is_total_dominating(const Graph& g, const VertexSet& d);

// Dominating and G[d] connected.
bool is_connected_dominating(const Graph& g, const VertexSet& d);

struct PrivateNeighbors {
  VertexSet pn;   // {w : N[w] cap s = {v}}
  VertexSet epn;  // pn minus s
};

// Requires v in s (NotInSet otherwise).
PrivateNeighbors private_neighbors(const Graph& g, const VertexSet& s, int v);

// Ore's criterion: d minimal iff every member keeps a private neighbor.
// Requires d dominating (NotDominating otherwise).
bool is_minimal_dominating(const Graph& g, const VertexSet& d);

DegreeBounds degree_bounds(const Graph& g);

// Picks the vertex covering the most currently-undominated vertices, lowest
// index on ties, until everything is covered. Dominating, not necessarily
// minimum.
VertexSet greedy_dominating_set(const Graph& g);

// Exact domination number by branch and bound: branch on the closed
// neighborhood of an undominated vertex with the fewest remaining options,
// seeded by the greedy upper bound and pruned with
// |chosen| + ceil(undominated / (1 + max degree)).
DominationCertificate gamma(const Graph& g);

// Exact total domination number; defined only for graphs without isolated
// vertices. Same search over open neighborhoods.
DominationCertificate gamma_total(const Graph& g);

// Exact connected domination number; defined only for connected graphs.
// Enumerates subsets by increasing size with a connectivity check.
DominationCertificate gamma_connected(const Graph& g);

}  // namespace domina

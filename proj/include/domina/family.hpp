#pragma once

#include <nlohmann/json.hpp>

#include "domina/graph.hpp"

namespace domina {

// Two-layer construction: a head graph H1 on k vertices, a body graph H2
// partitioned into V_1..V_k plus a remainder part, and a cross relation
// attaching body vertices to head vertices. Valid instances compose into
// graphs whose domination number equals k.
struct FamilyDecomposition {
  Graph h1;
  Graph h2;
  std::vector<VertexSet> parts;  // V_1..V_k, as subsets of V(h2)
  VertexSet v_last;              // the remainder part, over V(h2)
  std::vector<VertexSet> cross;  // per h2 vertex: adjacent h1 vertices

  int k() const { return h1.order(); }
};

// Structural checks, in order: part list shape and universes
// (PartitionInvalid), the partition property itself (PartitionInvalid),
// k(k-1) <= |V(h2)| <= k^2+k (SizeBoundViolated), nonempty V_i for
// non-isolated v_i (EmptyPartForNonIsolated), cross[w] = {i} exactly for
// w in V_i (CrossEdgeViolation), and >= 2 cross partners for every
// remainder vertex (VLastUnderConnected).
void validate_decomposition(const FamilyDecomposition& d);

struct BuiltFamilyGraph {
  Graph graph;  // order k + |V(h2)|
  int k;

  // Labeling: head vertices first, body vertices shifted by k.
  int h1_vertex(int i) const { return i; }
  int h2_vertex(int j) const { return k + j; }
};

// Composes the graph; validates first.
BuiltFamilyGraph build_family_graph(const FamilyDecomposition& d);

struct RestrictedSubgraphs {
  InducedSubgraph h1_i;  // h1 on {v_i : i in i_set}
  InducedSubgraph h2_i;  // h2 on the parts of i_set plus remainder vertices
                         // with no cross partner outside i_set
};

// i_set is a subset of head indices {0..k-1}.
RestrictedSubgraphs restricted_subgraphs(const FamilyDecomposition& d, const VertexSet& i_set);

struct BoundarySets {
  VertexSet nh1_of_s;       // head vertices cross-adjacent to some member of s
  VertexSet nh1i_of_comp;   // {v_j : j in i_set, v_j h1-adjacent to some v_i outside}
};

BoundarySets boundary_sets(const FamilyDecomposition& d, const VertexSet& s,
                           const VertexSet& i_set);

struct ConditionCResult {
  bool ok;
  // First violating pair in enumeration order (index sets by increasing size
  // then lexicographic, then candidate sets likewise) when !ok.
  VertexSet i_set;  // over {0..k-1}
  VertexSet s;      // over V(h2)
};

// Exhaustively checks: for every nonempty index subset I of size s, every
// S subset of V(h2) with |S| <= s-1 whose closed h2-neighborhoods cover the
// restricted body graph has combined head boundary of size <= s-1. S ranges
// over the whole body, not just the restricted subgraph: a vertex excluded
// from h2^I can still dominate into it through h2 edges, and such sets are
// exactly the body parts of small dominating sets of a built graph. The
// empty set dominates exactly the empty graph. Refuses decompositions with
// k + |V(h2)| > max_order (DecompositionTooLarge); subset enumeration grows
// too fast beyond that.
ConditionCResult check_condition_c(const FamilyDecomposition& d, int max_order = 40);

// Reads the decomposition off a minimum dominating set of cardinality
// floor(sqrt(n)): head = G[gamma_set], parts = external private neighbors,
// remainder = body vertices with >= 2 neighbors in gamma_set. The input set
// is re-validated against the exact solver rather than trusted.
FamilyDecomposition extract_decomposition(const Graph& g, const VertexSet& gamma_set);

// True iff gamma(g) = floor(sqrt(n)). Requires g connected and n >= 4.
bool is_in_family(const Graph& g);

// JSON document: k, graph6 of both layers, parts and remainder as sorted
// index arrays, cross as sorted [body, head] pairs. All indices 0-based.
nlohmann::ordered_json decomposition_to_json(const FamilyDecomposition& d);
FamilyDecomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace domina

#include "domina/family.hpp"

#include <algorithm>
#include <string>

#include "domina/classifier.hpp"
#include "domina/domination.hpp"
#include "domina/error.hpp"
#include "domina/graph6.hpp"

namespace domina {

void validate_decomposition(const FamilyDecomposition& d) {
  const int k = d.k();
  const int m = d.h2.order();

  if (static_cast<int>(d.parts.size()) != k)
    fail(Errc::PartitionInvalid,
         "expected " + std::to_string(k) + " parts, got " + std::to_string(d.parts.size()));
  if (static_cast<int>(d.cross.size()) != m)
    fail(Errc::PartitionInvalid, "cross relation must list every h2 vertex");
  if (d.v_last.universe() != m) fail(Errc::PartitionInvalid, "v_last universe mismatch");
  for (const auto& p : d.parts)
    if (p.universe() != m) fail(Errc::PartitionInvalid, "part universe mismatch");
  for (const auto& c : d.cross)
    if (c.universe() != k) fail(Errc::PartitionInvalid, "cross universe mismatch");

  VertexSet seen(m);
  int total = d.v_last.count();
  for (const auto& p : d.parts) {
    if (p.intersects(seen) || p.intersects(d.v_last))
      fail(Errc::PartitionInvalid, "parts overlap");
    seen |= p;
    total += p.count();
  }
  if (total != m) fail(Errc::PartitionInvalid, "parts do not cover V(h2)");

  if (m < k * (k - 1) || m > k * k + k)
    fail(Errc::SizeBoundViolated, "|V(h2)| = " + std::to_string(m) + " outside [" +
                                      std::to_string(k * (k - 1)) + ", " +
                                      std::to_string(k * k + k) + "]");

  for (int i = 0; i < k; ++i)
    if (d.parts[i].empty() && !d.h1.neighbors(i).empty())
      fail(Errc::EmptyPartForNonIsolated,
           "V_" + std::to_string(i) + " empty but v_" + std::to_string(i) + " is not isolated");

  for (int i = 0; i < k; ++i) {
    VertexSet expect(k);
    expect.set(i);
    for (int w : d.parts[i])
      if (!(d.cross[w] == expect))
        fail(Errc::CrossEdgeViolation, "vertex " + std::to_string(w) + " of V_" +
                                           std::to_string(i) +
                                           " must cross to exactly v_" + std::to_string(i));
  }

  for (int w : d.v_last)
    if (d.cross[w].count() < 2)
      fail(Errc::VLastUnderConnected,
           "remainder vertex " + std::to_string(w) + " has fewer than 2 cross partners");
}

BuiltFamilyGraph build_family_graph(const FamilyDecomposition& d) {
  validate_decomposition(d);
  const int k = d.k();
  const int m = d.h2.order();
  const int n = k + m;
  if (n > kMaxVertices)
    fail(Errc::UnsupportedOrder, "composed order " + std::to_string(n) + " exceeds limit");

  std::vector<VertexSet> rows(n, VertexSet(n));
  for (int i = 0; i < k; ++i)
    for (int j : d.h1.neighbors(i)) rows[i].set(j);
  for (int w = 0; w < m; ++w) {
    for (int x : d.h2.neighbors(w)) rows[k + w].set(k + x);
    for (int i : d.cross[w]) {
      rows[k + w].set(i);
      rows[i].set(k + w);
    }
  }
  return BuiltFamilyGraph{Graph::from_adjacency(n, std::move(rows)), k};
}

namespace {

// Body vertices of the restricted subgraph: the selected parts plus
// remainder vertices whose cross partners all lie inside i_set.
VertexSet restricted_body_vertices(const FamilyDecomposition& d, const VertexSet& i_set) {
  VertexSet verts(d.h2.order());
  for (int i : i_set) verts |= d.parts[i];
  for (int w : d.v_last)
    if (d.cross[w].is_subset_of(i_set)) verts.set(w);
  return verts;
}

}  // namespace

RestrictedSubgraphs restricted_subgraphs(const FamilyDecomposition& d, const VertexSet& i_set) {
  assert(i_set.universe() == d.k());
  RestrictedSubgraphs out;
  out.h1_i = induced_subgraph(d.h1, i_set);
  out.h2_i = induced_subgraph(d.h2, restricted_body_vertices(d, i_set));
  return out;
}

BoundarySets boundary_sets(const FamilyDecomposition& d, const VertexSet& s,
                           const VertexSet& i_set) {
  assert(s.universe() == d.h2.order() && i_set.universe() == d.k());
  BoundarySets out{VertexSet(d.k()), VertexSet(d.k())};
  for (int w : s) out.nh1_of_s |= d.cross[w];
  for (int j : i_set)
    if (d.h1.neighbors(j).intersects(VertexSet::full(d.k()) - i_set)) out.nh1i_of_comp.set(j);
  return out;
}

namespace {

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Dominating-set test inside h2 restricted to verts: the closed
// neighborhoods of s within h2 must cover verts. The empty set dominates
// exactly the empty graph.
bool dominates_restricted(const Graph& h2, const VertexSet& verts, const VertexSet& s) {
  VertexSet covered(h2.order());
  for (int w : s) {
    covered |= h2.neighbors(w);
    covered.set(w);
  }
  return verts.is_subset_of(covered);
}

}  // namespace

ConditionCResult check_condition_c(const FamilyDecomposition& d, int max_order) {
  validate_decomposition(d);
  const int k = d.k();
  const int m = d.h2.order();
  if (k + m > max_order)
    fail(Errc::DecompositionTooLarge, "k + |V(h2)| = " + std::to_string(k + m) +
                                          " exceeds enumeration cap " +
                                          std::to_string(max_order));

  for (int s_size = 1; s_size <= k; ++s_size) {
    std::vector<int> i_idx(s_size);
    for (int i = 0; i < s_size; ++i) i_idx[i] = i;
    do {
      VertexSet i_set(k);
      for (int i : i_idx) i_set.set(i);
      const VertexSet body = restricted_body_vertices(d, i_set);
      const VertexSet comp_boundary = boundary_sets(d, VertexSet(m), i_set).nh1i_of_comp;

      // S ranges over the whole body: vertices outside h2^I may still
      // dominate into it through h2 edges.
      for (int t = 0; t <= s_size - 1 && t <= m; ++t) {
        std::vector<int> s_idx(t);
        for (int i = 0; i < t; ++i) s_idx[i] = i;
        do {
          VertexSet cand(m);
          for (int w : s_idx) cand.set(w);
          if (!dominates_restricted(d.h2, body, cand)) continue;
          VertexSet boundary = comp_boundary;
          for (int w : cand) boundary |= d.cross[w];
          if (boundary.count() > s_size - 1)
            return ConditionCResult{false, i_set, cand};
        } while (next_combination(s_idx, m));
      }
    } while (next_combination(i_idx, k));
  }
  return ConditionCResult{true, VertexSet(k), VertexSet(m)};
}

FamilyDecomposition extract_decomposition(const Graph& g, const VertexSet& gamma_set) {
  const int n = g.order();
  if (!is_connected(g)) fail(Errc::Disconnected, "extraction needs a connected graph");
  if (n < 4) fail(Errc::GraphTooSmall, "extraction needs n >= 4");
  const int k = static_cast<int>(isqrt_floor(static_cast<std::uint64_t>(n)));
  if (gamma_set.count() != k)
    fail(Errc::WrongCardinality, "|gamma_set| = " + std::to_string(gamma_set.count()) +
                                     ", floor(sqrt(n)) = " + std::to_string(k));
  if (!is_dominating(g, gamma_set)) fail(Errc::NotGammaSet, "set does not dominate");
  if (gamma(g).value != k) fail(Errc::NotGammaSet, "set is not minimum");

  const VertexSet rest = g.vertex_set() - gamma_set;
  const InducedSubgraph head = induced_subgraph(g, gamma_set);
  const InducedSubgraph body = induced_subgraph(g, rest);
  const int m = body.graph.order();

  FamilyDecomposition d;
  d.h1 = head.graph;
  d.h2 = body.graph;
  d.parts.assign(k, VertexSet(m));
  d.v_last = VertexSet(m);
  d.cross.assign(m, VertexSet(k));

  for (int j = 0; j < m; ++j) {
    const VertexSet hits = g.neighbors(body.to_old[j]) & gamma_set;
    for (int v : hits) d.cross[j].set(head.to_new[v]);
    if (hits.count() >= 2)
      d.v_last.set(j);
    else
      d.parts[head.to_new[hits.first()]].set(j);  // unique dominator: epn member
  }

  validate_decomposition(d);  // guaranteed for a true gamma-set
  return d;
}

bool is_in_family(const Graph& g) {
  if (!is_connected(g)) fail(Errc::Disconnected, "membership needs a connected graph");
  if (g.order() < 4) fail(Errc::GraphTooSmall, "membership needs n >= 4");
  return gamma(g).value == static_cast<int>(isqrt_floor(static_cast<std::uint64_t>(g.order())));
}

nlohmann::ordered_json decomposition_to_json(const FamilyDecomposition& d) {
  nlohmann::ordered_json j;
  j["k"] = d.k();
  j["h1"] = to_graph6(d.h1);
  j["h2"] = to_graph6(d.h2);
  j["parts"] = nlohmann::ordered_json::array();
  for (const auto& p : d.parts) j["parts"].push_back(p.to_vector());
  j["v_last"] = d.v_last.to_vector();
  auto pairs = nlohmann::ordered_json::array();
  for (int w = 0; w < d.h2.order(); ++w)
    for (int i : d.cross[w]) pairs.push_back({w, i});
  j["cross"] = std::move(pairs);
  return j;
}

FamilyDecomposition decomposition_from_json(const nlohmann::json& j) {
  FamilyDecomposition d;
  const int k = j.at("k").get<int>();
  d.h1 = parse_graph6(j.at("h1").get<std::string>());
  d.h2 = parse_graph6(j.at("h2").get<std::string>());
  if (d.h1.order() != k)
    fail(Errc::PartitionInvalid, "k does not match the order of h1");
  const int m = d.h2.order();
  d.parts.assign(k, VertexSet(m));
  d.v_last = VertexSet(m);
  d.cross.assign(m, VertexSet(k));

  const auto in_range = [](int v, int hi) { return v >= 0 && v < hi; };
  const auto& parts = j.at("parts");
  if (static_cast<int>(parts.size()) != k)
    fail(Errc::PartitionInvalid, "parts array must have k entries");
  for (int i = 0; i < k; ++i)
    for (int w : parts[i].get<std::vector<int>>()) {
      if (!in_range(w, m)) fail(Errc::PartitionInvalid, "part index out of range");
      d.parts[i].set(w);
    }
  for (int w : j.at("v_last").get<std::vector<int>>()) {
    if (!in_range(w, m)) fail(Errc::PartitionInvalid, "v_last index out of range");
    d.v_last.set(w);
  }
  for (const auto& pr : j.at("cross")) {
    if (!pr.is_array() || pr.size() != 2)
      fail(Errc::PartitionInvalid, "cross entries must be [h2, h1] pairs");
    const int w = pr[0].get<int>(), i = pr[1].get<int>();
    if (!in_range(w, m) || !in_range(i, k))
      fail(Errc::PartitionInvalid, "cross pair out of range");
    d.cross[w].set(i);
  }
  return d;
}

}  // namespace domina

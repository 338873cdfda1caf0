#include "domina/domination.hpp"

#include <string>

#include "domina/error.hpp"

namespace domina {

const char* to_string(DominationVariant v) {
  switch (v) {
    case DominationVariant::PLAIN: return "plain";
    case DominationVariant::TOTAL: return "total";
    case DominationVariant::CONNECTED: return "connected";
  }
  return "?";
}

bool is_dominating(const Graph& g, const VertexSet& d) {
  VertexSet covered(g.order());
  for (int v : d) {
    covered |= g.neighbors(v);
    covered.set(v);
  }
  return covered == g.vertex_set();
}

bool is_total_dominating(const Graph& g, const VertexSet& d) {
  VertexSet covered(g.order());
  for (int v : d) covered |= g.neighbors(v);
  return covered == g.vertex_set();
}

bool is_connected_dominating(const Graph& g, const VertexSet& d) {
  if (!is_dominating(g, d)) return false;
  return is_connected(induced_subgraph(g, d).graph);
}

PrivateNeighbors private_neighbors(const Graph& g, const VertexSet& s, int v) {
  if (v < 0 || v >= g.order() || !s.test(v))
    fail(Errc::NotInSet, "vertex " + std::to_string(v) + " not in s");
  PrivateNeighbors out{VertexSet(g.order()), VertexSet(g.order())};
  for (int w = 0; w < g.order(); ++w) {
    VertexSet hit = g.neighbors(w) & s;
    if (s.test(w)) hit.set(w);
    if (hit.count() == 1 && hit.test(v)) out.pn.set(w);
  }
  out.epn = out.pn - s;
  return out;
}

bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
  if (!is_dominating(g, d)) fail(Errc::NotDominating, "d is not a dominating set");
  // For each vertex w, the member of d privately served by w (if unique).
  VertexSet has_private(g.order());
  for (int w = 0; w < g.order(); ++w) {
    VertexSet hit = g.neighbors(w) & d;
    if (d.test(w)) hit.set(w);
    if (hit.count() == 1) has_private.set(hit.first());
  }
  return d.is_subset_of(has_private);
}

DegreeBounds degree_bounds(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(Errc::EmptyGraph, "degree bounds need n >= 1");
  const int delta = g.max_degree();
  return DegreeBounds{(n + delta) / (1 + delta), n - delta};
}

namespace {

// Shared greedy core; cover(v) is N[v] for plain domination, N(v) for total.
template <typename CoverFn>
VertexSet greedy_cover(const Graph& g, CoverFn cover) {
  const int n = g.order();
  VertexSet chosen(n);
  VertexSet undominated = VertexSet::full(n);
  while (!undominated.empty()) {
    int best = -1, best_gain = -1;
    for (int v = 0; v < n; ++v) {
      const int gain = (cover(v) & undominated).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    assert(best_gain > 0);
    chosen.set(best);
    undominated -= cover(best);
  }
  return chosen;
}

// Branch-and-bound minimiser shared by the plain and total variants.
// Any feasible set must hit options(v) for every uncovered v, so the search
// branches over options(v) of the uncovered vertex with the fewest live
// options, excluding tried vertices from later siblings.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, std::vector<VertexSet> cover, int per_vertex_cap,
              VertexSet initial_best)
      : g_(g), cover_(std::move(cover)), cap_(per_vertex_cap), best_(initial_best),
        best_size_(initial_best.count()) {}

  VertexSet run(const VertexSet& root_candidates) {
    recurse(VertexSet(g_.order()), 0, VertexSet(g_.order()), root_candidates);
    return best_;
  }

 private:
  void recurse(VertexSet chosen, int chosen_size, VertexSet covered, VertexSet candidates) {
    const int uncovered = g_.order() - covered.count();
    if (uncovered == 0) {
      if (chosen_size < best_size_) {
        best_ = chosen;
        best_size_ = chosen_size;
      }
      return;
    }
    if (chosen_size + (uncovered + cap_ - 1) / cap_ >= best_size_) return;

    // Uncovered vertex with the fewest live options; lowest index on ties.
    int branch_v = -1, branch_opts = kMaxVertices + 1;
    const VertexSet all = g_.vertex_set();
    for (int v : all - covered) {
      const int opts = (cover_[v] & candidates).count();
      if (opts < branch_opts) {
        branch_opts = opts;
        branch_v = v;
        if (opts == 0) break;
      }
    }
    if (branch_opts == 0) return;  // branch_v can no longer be covered

    for (int u : cover_[branch_v] & candidates) {
      candidates.reset(u);  // later siblings must not retry u
      VertexSet next_chosen = chosen;
      next_chosen.set(u);
      recurse(next_chosen, chosen_size + 1, covered | cover_[u], candidates);
    }
  }

  const Graph& g_;
  std::vector<VertexSet> cover_;  // per vertex: who may cover it / what it covers
  int cap_;                       // max vertices covered by one choice
  VertexSet best_;
  int best_size_;
};

}  // namespace

VertexSet greedy_dominating_set(const Graph& g) {
  return greedy_cover(g, [&](int v) { return g.closed_neighborhood(v); });
}

DominationCertificate gamma(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(Errc::EmptyGraph, "gamma needs n >= 1");

  std::vector<VertexSet> cover(n);
  for (int v = 0; v < n; ++v) cover[v] = g.closed_neighborhood(v);

  // Root reduction: drop a candidate whose closed neighborhood is contained
  // in another's; on equality keep the lowest index.
  VertexSet candidates = VertexSet::full(n);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (u == v || !candidates.test(u)) continue;
      if (cover[v].is_subset_of(cover[u]) && (cover[v] != cover[u] || u < v)) {
        candidates.reset(v);
        break;
      }
    }
  }

  CoverSearch search(g, cover, 1 + g.max_degree(), greedy_dominating_set(g));
  VertexSet witness = search.run(candidates);
  assert(is_dominating(g, witness));
  return DominationCertificate{DominationVariant::PLAIN, witness.count(), witness};
}

DominationCertificate gamma_total(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(Errc::EmptyGraph, "gamma_total needs n >= 1");
  if (g.has_isolated_vertex())
    fail(Errc::TotalDominationUndefined, "graph has an isolated vertex");

  // Open-neighborhood coverage: a vertex never covers itself, so a full cover
  // automatically leaves no isolated vertex inside the witness.
  std::vector<VertexSet> cover(n);
  for (int v = 0; v < n; ++v) cover[v] = g.neighbors(v);

  VertexSet seed = greedy_cover(g, [&](int v) { return g.neighbors(v); });
  CoverSearch search(g, cover, g.max_degree(), seed);
  VertexSet witness = search.run(VertexSet::full(n));
  assert(is_total_dominating(g, witness));
  return DominationCertificate{DominationVariant::TOTAL, witness.count(), witness};
}

namespace {

// Visits k-subsets of {0..n-1} in lexicographic order.
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

}  // namespace

DominationCertificate gamma_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(Errc::EmptyGraph, "gamma_connected needs n >= 1");
  if (!is_connected(g)) fail(Errc::ConnectedDominationUndefined, "graph is disconnected");

  const int lower = degree_bounds(g).lower;
  for (int size = lower; size <= n; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    do {
      VertexSet d(n);
      for (int v : idx) d.set(v);
      if (is_connected_dominating(g, d))
        return DominationCertificate{DominationVariant::CONNECTED, size, d};
    } while (next_combination(idx, n));
  }
  // A connected graph always has a connected dominating set (all of V).
  fail(Errc::ConnectedDominationUndefined, "unreachable");
}

}  // namespace domina

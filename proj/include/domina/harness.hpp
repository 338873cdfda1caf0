#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "domina/domination.hpp"
#include "domina/graph.hpp"

namespace domina {

// One verified result per id. SCC2_CONJECTURE is the open one: a violation
// there is a counterexample candidate, not a bug.
enum class PredicateId {
  ORE_HALF_N,
  JAEGER_PRODUCT,
  OBSERVATION_EITHER_TYPE,
  DEGREE_BOUNDS,
  NECESSARY_DELTA,
  BRIGHAM_DIAM,
  SUFFICIENT_CONDITIONS,
  CHARACTERIZATION_EQUIV,
  CLASSIFIER_SOUNDNESS,
  SCC2_CONJECTURE,
};

inline constexpr std::array<PredicateId, 10> kAllPredicates = {
    PredicateId::ORE_HALF_N,          PredicateId::JAEGER_PRODUCT,
    PredicateId::OBSERVATION_EITHER_TYPE, PredicateId::DEGREE_BOUNDS,
    PredicateId::NECESSARY_DELTA,     PredicateId::BRIGHAM_DIAM,
    PredicateId::SUFFICIENT_CONDITIONS,   PredicateId::CHARACTERIZATION_EQUIV,
    PredicateId::CLASSIFIER_SOUNDNESS,    PredicateId::SCC2_CONJECTURE,
};

const char* to_string(PredicateId id);
std::optional<PredicateId> predicate_from_string(std::string_view name);

// Whether evaluating the predicate (hypothesis or check) calls the exact
// solver; such predicates carry the tighter sweep budgets.
bool predicate_needs_exact_gamma(PredicateId id);

// Per-graph derived values, each computed at most once. Lets a sweep share
// the two exact solves across every requested predicate. Holds a reference:
// the graph must outlive the GraphFacts (never bind a temporary).
class GraphFacts {
 public:
  explicit GraphFacts(const Graph& g) : g_(&g) {}

  const Graph& g() const { return *g_; }
  const Graph& gbar();
  const DominationCertificate& gamma_g();
  const DominationCertificate& gamma_gbar();
  const Metrics& metrics_g();
  const Metrics& metrics_gbar();
  bool connected_g();
  int floor_sqrt_n() const;
  int ceil_sqrt_n() const;

 private:
  const Graph* g_;
  std::optional<Graph> gbar_;
  std::optional<DominationCertificate> gamma_g_, gamma_gbar_;
  std::optional<Metrics> metrics_g_, metrics_gbar_;
  std::optional<bool> connected_g_;
};

// Hypothesis filter; graphs outside it are skipped, not counted.
bool predicate_applies(PredicateId id, GraphFacts& facts);

// The checked statement, meaningful only when the hypothesis holds.
bool predicate_holds(PredicateId id, GraphFacts& facts);

struct PredicateOutcome {
  std::uint64_t tested = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> witnesses;  // graph6, sorted lexicographically
  std::string notes;
};

struct ScanReport {
  nlohmann::ordered_json population;
  std::vector<std::pair<PredicateId, PredicateOutcome>> predicates;
  std::uint64_t wall_ms = 0;

  // with_timing=false omits wall_ms so identical inputs give identical bytes.
  nlohmann::ordered_json to_json(bool with_timing) const;
  std::string to_csv() const;

  std::uint64_t theorem_violations() const;
  std::uint64_t conjecture_violations() const;
  const PredicateOutcome* outcome(PredicateId id) const;
};

// Every labeled graph of order n against every requested predicate.
// Budget: n <= 7 when any predicate needs the exact solver, n <= 8 otherwise
// (ScanTooLarge beyond).
ScanReport scan_exhaustive(int n, const std::vector<PredicateId>& predicates);

// `trials` independent G(n,p) draws; trial i is seeded with the i-th output
// of splitmix64(seed). Budget: n <= 20 for solver predicates, n <= 62
// otherwise; trials <= 10^7.
ScanReport scan_sampled(int n, double p, std::uint64_t trials, std::uint64_t seed,
                        const std::vector<PredicateId>& predicates);

// Newline-delimited graph6 stream, filtered to SCC(2) members, each checked
// against the conjectured ceil(sqrt(n)) bound on both sides. Malformed lines
// raise MalformedGraph6 naming the line number.
ScanReport conjecture_scan(std::istream& in);

// Worker cap: DOMINA_THREADS env var; unset or 0 means hardware concurrency.
int thread_count();

}  // namespace domina

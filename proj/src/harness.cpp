#include "domina/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "domina/classifier.hpp"
#include "domina/error.hpp"
#include "domina/family.hpp"
#include "domina/generate.hpp"
#include "domina/graph6.hpp"

namespace domina {

const char* to_string(PredicateId id) {
  switch (id) {
    case PredicateId::ORE_HALF_N: return "ORE_HALF_N";
    case PredicateId::JAEGER_PRODUCT: return "JAEGER_PRODUCT";
    case PredicateId::OBSERVATION_EITHER_TYPE: return "OBSERVATION_EITHER_TYPE";
    case PredicateId::DEGREE_BOUNDS: return "DEGREE_BOUNDS";
    case PredicateId::NECESSARY_DELTA: return "NECESSARY_DELTA";
    case PredicateId::BRIGHAM_DIAM: return "BRIGHAM_DIAM";
    case PredicateId::SUFFICIENT_CONDITIONS: return "SUFFICIENT_CONDITIONS";
    case PredicateId::CHARACTERIZATION_EQUIV: return "CHARACTERIZATION_EQUIV";
    case PredicateId::CLASSIFIER_SOUNDNESS: return "CLASSIFIER_SOUNDNESS";
    case PredicateId::SCC2_CONJECTURE: return "SCC2_CONJECTURE";
  }
  return "?";
}

std::optional<PredicateId> predicate_from_string(std::string_view name) {
  for (PredicateId id : kAllPredicates)
    if (name == to_string(id)) return id;
  return std::nullopt;
}

bool predicate_needs_exact_gamma(PredicateId) {
  // Every current predicate checks or filters via an exact solve.
  return true;
}

const Graph& GraphFacts::gbar() {
  if (!gbar_) gbar_ = g_->complement();
  return *gbar_;
}

const DominationCertificate& GraphFacts::gamma_g() {
  if (!gamma_g_) gamma_g_ = gamma(*g_);
  return *gamma_g_;
}

const DominationCertificate& GraphFacts::gamma_gbar() {
  if (!gamma_gbar_) gamma_gbar_ = gamma(gbar());
  return *gamma_gbar_;
}

const Metrics& GraphFacts::metrics_g() {
  if (!metrics_g_) metrics_g_ = metrics(*g_);
  return *metrics_g_;
}

const Metrics& GraphFacts::metrics_gbar() {
  if (!metrics_gbar_) metrics_gbar_ = metrics(gbar());
  return *metrics_gbar_;
}

bool GraphFacts::connected_g() {
  if (!connected_g_) connected_g_ = is_connected(*g_);
  return *connected_g_;
}

int GraphFacts::floor_sqrt_n() const {
  return static_cast<int>(isqrt_floor(static_cast<std::uint64_t>(g_->order())));
}

int GraphFacts::ceil_sqrt_n() const {
  return static_cast<int>(isqrt_ceil(static_cast<std::uint64_t>(g_->order())));
}

namespace {

bool in_scc2(GraphFacts& f) {
  return f.metrics_g().radius == 2 && f.metrics_g().diameter == 2 &&
         f.metrics_gbar().radius == 2 && f.metrics_gbar().diameter == 2;
}

}  // namespace

bool predicate_applies(PredicateId id, GraphFacts& f) {
  const int n = f.g().order();
  switch (id) {
    case PredicateId::ORE_HALF_N:
      return n >= 1 && !f.g().has_isolated_vertex();
    case PredicateId::JAEGER_PRODUCT:
    case PredicateId::OBSERVATION_EITHER_TYPE:
    case PredicateId::DEGREE_BOUNDS:
      return n >= 1;
    case PredicateId::NECESSARY_DELTA:
      return n >= 2 && f.gamma_g().value <= f.floor_sqrt_n();
    case PredicateId::BRIGHAM_DIAM:
      return n >= 1 && f.connected_g();
    case PredicateId::SUFFICIENT_CONDITIONS:
      return n >= 2 && (!is_connected(f.gbar()) || f.metrics_gbar().diameter >= 3);
    case PredicateId::CHARACTERIZATION_EQUIV:
      return n >= 4 && f.connected_g();
    case PredicateId::CLASSIFIER_SOUNDNESS:
      return n >= 2;
    case PredicateId::SCC2_CONJECTURE:
      return in_scc2(f);
  }
  return false;
}

bool predicate_holds(PredicateId id, GraphFacts& f) {
  const int n = f.g().order();
  switch (id) {
    case PredicateId::ORE_HALF_N:
      return f.gamma_g().value <= n / 2;
    case PredicateId::JAEGER_PRODUCT:
      return static_cast<long long>(f.gamma_g().value) * f.gamma_gbar().value <= n;
    case PredicateId::OBSERVATION_EITHER_TYPE:
      return f.gamma_g().value <= f.floor_sqrt_n() ||
             f.gamma_gbar().value <= f.floor_sqrt_n();
    case PredicateId::DEGREE_BOUNDS: {
      const DegreeBounds b = degree_bounds(f.g());
      return b.lower <= f.gamma_g().value && f.gamma_g().value <= b.upper;
    }
    case PredicateId::NECESSARY_DELTA:
      return f.g().max_degree() >= f.ceil_sqrt_n() - 1;
    case PredicateId::BRIGHAM_DIAM:
      return !(f.gamma_gbar().value >= 3 && f.metrics_g().diameter > 2);
    case PredicateId::SUFFICIENT_CONDITIONS:
      return f.gamma_g().value <= f.floor_sqrt_n();
    case PredicateId::CHARACTERIZATION_EQUIV: {
      if (f.gamma_g().value != f.floor_sqrt_n()) return true;
      // A gamma-set of cardinality floor(sqrt(n)) must decompose cleanly.
      try {
        const FamilyDecomposition d = extract_decomposition(f.g(), f.gamma_g().witness);
        return check_condition_c(d).ok;
      } catch (const Error&) {
        return false;
      }
    }
    case PredicateId::CLASSIFIER_SOUNDNESS: {
      const TypeDecision td = classify_fast(f.g());
      const bool scc2 = in_scc2(f);
      switch (td.verdict) {
        case TypeVerdict::TYPE_I:
          return !scc2 && f.gamma_g().value <= f.floor_sqrt_n();
        case TypeVerdict::TYPE_II:
          return !scc2 && f.gamma_gbar().value <= f.floor_sqrt_n();
        case TypeVerdict::SCC2_UNDECIDED:
          return scc2 && td.reason == TypeReason::NONE;
      }
      return false;
    }
    case PredicateId::SCC2_CONJECTURE:
      return f.gamma_g().value <= f.ceil_sqrt_n() &&
             f.gamma_gbar().value <= f.ceil_sqrt_n();
  }
  return false;
}

int thread_count() {
  if (const char* env = std::getenv("DOMINA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

struct Accumulator {
  std::uint64_t tested = 0;
  std::uint64_t violations = 0;
  std::set<std::string> witnesses;

  void merge(Accumulator&& o) {
    tested += o.tested;
    violations += o.violations;
    witnesses.merge(o.witnesses);
  }
};

// Evaluates every requested predicate on one graph, recording a graph6
// witness per violation.
void evaluate_graph(const Graph& g, const std::vector<PredicateId>& predicates,
                    std::vector<Accumulator>& acc) {
  GraphFacts facts(g);
  std::string g6;
  for (std::size_t i = 0; i < predicates.size(); ++i) {
    if (!predicate_applies(predicates[i], facts)) continue;
    ++acc[i].tested;
    if (!predicate_holds(predicates[i], facts)) {
      ++acc[i].violations;
      if (g6.empty()) g6 = to_graph6(g);
      acc[i].witnesses.insert(g6);
    }
  }
}

// Splits [0, total) into contiguous chunks, one worker thread each, and
// merges the per-worker accumulators in worker order.
std::vector<Accumulator> run_partitioned(
    std::uint64_t total, std::size_t n_predicates,
    const std::function<void(std::uint64_t, std::uint64_t, std::vector<Accumulator>&)>& body) {
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(std::max(thread_count(), 1), std::max<std::uint64_t>(total, 1)));
  std::vector<std::vector<Accumulator>> partial(workers,
                                                std::vector<Accumulator>(n_predicates));
  if (workers <= 1) {
    body(0, total, partial[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = chunk * w;
      const std::uint64_t hi = std::min(total, lo + chunk);
      pool.emplace_back([&, lo, hi, w] { body(lo, hi, partial[w]); });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<Accumulator> out(n_predicates);
  for (auto& part : partial)
    for (std::size_t i = 0; i < n_predicates; ++i) out[i].merge(std::move(part[i]));
  return out;
}

ScanReport assemble(nlohmann::ordered_json population,
                    const std::vector<PredicateId>& predicates,
                    std::vector<Accumulator> acc,
                    std::chrono::steady_clock::time_point start) {
  ScanReport report;
  report.population = std::move(population);
  for (std::size_t i = 0; i < predicates.size(); ++i) {
    PredicateOutcome out;
    out.tested = acc[i].tested;
    out.violations = acc[i].violations;
    out.witnesses.assign(acc[i].witnesses.begin(), acc[i].witnesses.end());
    if (predicates[i] == PredicateId::SCC2_CONJECTURE && out.violations > 0)
      out.notes = "counterexample candidate(s); verify independently";
    report.predicates.emplace_back(predicates[i], std::move(out));
  }
  report.wall_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start)
          .count());
  return report;
}

bool any_needs_solver(const std::vector<PredicateId>& predicates) {
  return std::any_of(predicates.begin(), predicates.end(), predicate_needs_exact_gamma);
}

}  // namespace

ScanReport scan_exhaustive(int n, const std::vector<PredicateId>& predicates) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 0) fail(Errc::ScanTooLarge, "negative order");
  const int cap = any_needs_solver(predicates) ? 7 : 8;
  if (n > cap)
    fail(Errc::ScanTooLarge, "exhaustive sweep capped at n <= " + std::to_string(cap) +
                                 " for this predicate set, got n = " + std::to_string(n));

  const std::uint64_t total = labeled_graph_count(n);
  auto acc = run_partitioned(
      total, predicates.size(),
      [&](std::uint64_t lo, std::uint64_t hi, std::vector<Accumulator>& local) {
        for (std::uint64_t mask = lo; mask < hi; ++mask)
          evaluate_graph(graph_from_edge_mask(n, mask), predicates, local);
      });

  nlohmann::ordered_json pop;
  pop["kind"] = "exhaustive";
  pop["n"] = n;
  pop["graphs"] = total;
  return assemble(std::move(pop), predicates, std::move(acc), start);
}

ScanReport scan_sampled(int n, double p, std::uint64_t trials, std::uint64_t seed,
                        const std::vector<PredicateId>& predicates) {
  const auto start = std::chrono::steady_clock::now();
  if (!(p >= 0.0 && p <= 1.0))
    fail(Errc::InvalidProbability, "p = " + std::to_string(p) + " outside [0, 1]");
  const int cap = any_needs_solver(predicates) ? 20 : 62;
  if (n < 0 || n > cap)
    fail(Errc::ScanTooLarge, "sampled sweep capped at n <= " + std::to_string(cap) +
                                 " for this predicate set, got n = " + std::to_string(n));
  if (trials > 10'000'000) fail(Errc::ScanTooLarge, "trial budget is 10^7");

  // Per-trial seeds drawn up front so workers stay independent of schedule.
  std::vector<std::uint64_t> trial_seeds(trials);
  SplitMix64 rng(seed);
  for (auto& s : trial_seeds) s = rng.next();

  auto acc = run_partitioned(
      trials, predicates.size(),
      [&](std::uint64_t lo, std::uint64_t hi, std::vector<Accumulator>& local) {
        for (std::uint64_t t = lo; t < hi; ++t)
          evaluate_graph(random_gnp(n, p, trial_seeds[t]), predicates, local);
      });

  nlohmann::ordered_json pop;
  pop["kind"] = "sampled";
  pop["n"] = n;
  pop["p"] = p;
  pop["trials"] = trials;
  pop["seed"] = seed;
  return assemble(std::move(pop), predicates, std::move(acc), start);
}

ScanReport conjecture_scan(std::istream& in) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Graph> graphs;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const Error& e) {
      fail(Errc::MalformedGraph6, "line " + std::to_string(line_no) + ": " + e.detail());
    }
  }

  const std::vector<PredicateId> predicates{PredicateId::SCC2_CONJECTURE};
  auto acc = run_partitioned(
      graphs.size(), predicates.size(),
      [&](std::uint64_t lo, std::uint64_t hi, std::vector<Accumulator>& local) {
        for (std::uint64_t i = lo; i < hi; ++i) evaluate_graph(graphs[i], predicates, local);
      });

  nlohmann::ordered_json pop;
  pop["kind"] = "stream";
  pop["graphs"] = graphs.size();
  return assemble(std::move(pop), predicates, std::move(acc), start);
}

nlohmann::ordered_json ScanReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["population"] = population;
  j["predicates"] = nlohmann::ordered_json::array();
  for (const auto& [id, out] : predicates) {
    nlohmann::ordered_json p;
    p["id"] = to_string(id);
    p["tested"] = out.tested;
    p["violations"] = out.violations;
    p["witnesses"] = out.witnesses;
    p["notes"] = out.notes;
    j["predicates"].push_back(std::move(p));
  }
  if (with_timing) j["wall_ms"] = wall_ms;
  return j;
}

std::string ScanReport::to_csv() const {
  std::ostringstream out;
  out << "predicate,tested,violations,witnesses,notes\n";
  for (const auto& [id, o] : predicates) {
    out << to_string(id) << ',' << o.tested << ',' << o.violations << ',';
    for (std::size_t i = 0; i < o.witnesses.size(); ++i) {
      if (i) out << ';';
      out << o.witnesses[i];
    }
    out << ',' << o.notes << '\n';
  }
  return out.str();
}

std::uint64_t ScanReport::theorem_violations() const {
  std::uint64_t v = 0;
  for (const auto& [id, out] : predicates)
    if (id != PredicateId::SCC2_CONJECTURE) v += out.violations;
  return v;
}

std::uint64_t ScanReport::conjecture_violations() const {
  const PredicateOutcome* out = outcome(PredicateId::SCC2_CONJECTURE);
  return out ? out->violations : 0;
}

const PredicateOutcome* ScanReport::outcome(PredicateId id) const {
  for (const auto& [pid, out] : predicates)
    if (pid == id) return &out;
  return nullptr;
}

}  // namespace domina

// Batch front end: gamma / classify / verify-family / scan over graph6 files.
// Exit codes: 0 clean, 1 usage or parse error, 2 failed check or theorem
// predicate violation, 3 conjecture counterexample found.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "domina/classifier.hpp"
#include "domina/domination.hpp"
#include "domina/error.hpp"
#include "domina/family.hpp"
#include "domina/graph6.hpp"
#include "domina/harness.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitClean = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitCounterexample = 3;

// Reads an input argument; "-" or empty means stdin.
std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path.empty() || path == "-") return nullptr;  // caller falls back to cin
  auto f = std::make_unique<std::ifstream>(path);
  if (!*f) throw std::runtime_error("cannot open input file: " + path);
  return f;
}

// Applies fn to every nonempty graph6 line; aborts with the line number on
// the first malformed one.
void for_each_graph(std::istream& in,
                    const std::function<void(const domina::Graph&, const std::string&)>& fn) {
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    try {
      fn(domina::parse_graph6(line), line);
    } catch (const domina::Error& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

int run_gamma(std::istream& in, const std::string& variant) {
  for_each_graph(in, [&](const domina::Graph& g, const std::string& line) {
    ordered_json row;
    row["graph6"] = line;
    row["n"] = g.order();
    row["variant"] = variant;
    try {
      domina::DominationCertificate cert =
          variant == "total"       ? domina::gamma_total(g)
          : variant == "connected" ? domina::gamma_connected(g)
                                   : domina::gamma(g);
      row["value"] = cert.value;
      row["witness"] = cert.witness.to_vector();
    } catch (const domina::Error&) {
      // Hypothesis violations (isolated vertex, disconnected, empty graph)
      // mark the row; the stream keeps going.
      row["value"] = "undefined";
    }
    std::cout << row.dump() << '\n';
  });
  return kExitClean;
}

int run_classify(std::istream& in, const std::string& mode) {
  for_each_graph(in, [&](const domina::Graph& g, const std::string& line) {
    ordered_json row;
    row["graph6"] = line;
    row["n"] = g.order();
    try {
      if (mode == "exact") {
        const domina::ExactTypes t = domina::classify_exact(g);
        row["type_i"] = t.type_i;
        row["type_ii"] = t.type_ii;
        row["gamma_g"] = t.gamma_g;
        row["gamma_gbar"] = t.gamma_gbar;
      } else {
        const domina::TypeDecision d = domina::classify_fast(g);
        row["verdict"] = domina::to_string(d.verdict);
        row["reason"] = domina::to_string(d.reason);
      }
    } catch (const domina::Error& e) {
      row["error"] = domina::to_string(e.code());
    }
    std::cout << row.dump() << '\n';
  });
  return kExitClean;
}

int run_verify_family(const std::string& path, bool opt_condition_c, bool opt_build,
                      bool opt_gamma_check) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open decomposition file: " + path);
  nlohmann::json doc;
  f >> doc;

  ordered_json verdict;
  bool all_ok = true;

  domina::FamilyDecomposition d = domina::decomposition_from_json(doc);
  try {
    domina::validate_decomposition(d);
    verdict["structure"] = {{"ok", true}};
  } catch (const domina::Error& e) {
    verdict["structure"] = {{"ok", false}, {"error", domina::to_string(e.code())},
                            {"detail", e.what()}};
    all_ok = false;
  }

  const bool structural_ok = verdict["structure"]["ok"].get<bool>();
  if (opt_condition_c && structural_ok) {
    const domina::ConditionCResult r = domina::check_condition_c(d);
    if (r.ok) {
      verdict["condition_c"] = {{"ok", true}};
    } else {
      verdict["condition_c"] = {{"ok", false},
                                {"witness",
                                 {{"i_set", r.i_set.to_vector()}, {"s", r.s.to_vector()}}}};
      all_ok = false;
    }
  }

  if ((opt_build || opt_gamma_check) && structural_ok) {
    const domina::BuiltFamilyGraph built = domina::build_family_graph(d);
    verdict["build"] = {{"ok", true},
                        {"graph6", domina::to_graph6(built.graph)},
                        {"order", built.graph.order()}};
    if (opt_gamma_check) {
      const int v = domina::gamma(built.graph).value;
      const int root = static_cast<int>(
          domina::isqrt_floor(static_cast<std::uint64_t>(built.graph.order())));
      const bool ok = v == root && v == built.k;
      verdict["gamma_check"] = {{"ok", ok}, {"gamma", v}, {"floor_sqrt_n", root}, {"k", built.k}};
      all_ok = all_ok && ok;
    }
  }

  std::cout << verdict.dump(2) << '\n';
  return all_ok ? kExitClean : kExitViolation;
}

int finish_scan(const domina::ScanReport& report, const std::string& out_path,
                const std::string& format, bool with_timing) {
  const std::string text =
      format == "csv" ? report.to_csv() : report.to_json(with_timing).dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
  }
  if (report.theorem_violations() > 0) return kExitViolation;
  if (report.conjecture_violations() > 0) return kExitCounterexample;
  return kExitClean;
}

std::vector<domina::PredicateId> parse_predicates(const std::vector<std::string>& names) {
  if (names.empty())
    return {domina::kAllPredicates.begin(), domina::kAllPredicates.end()};
  std::vector<domina::PredicateId> out;
  for (const auto& name : names) {
    const auto id = domina::predicate_from_string(name);
    if (!id) throw std::runtime_error("unknown predicate: " + name);
    out.push_back(*id);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domina: domination-number toolkit over graph6 streams"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string variant = "plain";
  std::string mode = "fast";
  std::string out_path;
  std::string format = "json";
  std::vector<std::string> predicate_names;
  bool opt_condition_c = false, opt_build = false, opt_gamma_check = false;
  bool with_timing = false;
  int scan_n = 0;
  double scan_p = 0.5;
  std::uint64_t scan_trials = 0, scan_seed = 0;
  std::string conjecture_file;

  auto* cmd_gamma = app.add_subcommand("gamma", "exact domination numbers per graph");
  cmd_gamma->add_option("input", input, "graph6 file, or - for stdin");
  cmd_gamma->add_option("--variant", variant, "plain|total|connected")
      ->check(CLI::IsMember({"plain", "total", "connected"}));

  auto* cmd_classify = app.add_subcommand("classify", "domination type per graph");
  cmd_classify->add_option("input", input, "graph6 file, or - for stdin");
  cmd_classify->add_option("--mode", mode, "fast|exact")
      ->check(CLI::IsMember({"fast", "exact"}));

  auto* cmd_verify = app.add_subcommand("verify-family", "check a decomposition JSON file");
  cmd_verify->add_option("file", input, "decomposition JSON")->required();
  cmd_verify->add_flag("--condition-c", opt_condition_c, "run the exhaustive condition check");
  cmd_verify->add_flag("--build", opt_build, "compose the graph and report it");
  cmd_verify->add_flag("--gamma-check", opt_gamma_check,
                       "verify gamma of the composed graph equals k (implies --build)");

  auto* cmd_scan = app.add_subcommand("scan", "sweep a graph population against predicates");
  cmd_scan->require_subcommand(1);
  auto* scan_ex = cmd_scan->add_subcommand("exhaustive", "all labeled graphs of order n");
  scan_ex->add_option("n", scan_n, "graph order")->required();
  auto* scan_sa = cmd_scan->add_subcommand("sampled", "seeded G(n,p) draws");
  scan_sa->add_option("n", scan_n, "graph order")->required();
  scan_sa->add_option("p", scan_p, "edge probability")->required();
  scan_sa->add_option("trials", scan_trials, "number of draws")->required();
  scan_sa->add_option("seed", scan_seed, "RNG seed")->required();
  auto* scan_co = cmd_scan->add_subcommand("conjecture", "scan a graph6 file for counterexamples");
  scan_co->add_option("file", conjecture_file, "graph6 file, or - for stdin")->required();
  for (auto* sc : {scan_ex, scan_sa, scan_co}) {
    sc->add_option("--out", out_path, "report path (default stdout)");
    sc->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    sc->add_flag("--timing", with_timing, "include wall_ms in the JSON report");
  }
  for (auto* sc : {scan_ex, scan_sa})
    sc->add_option("--predicates", predicate_names, "predicate ids (default: all)")
        ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message or help text
    return code == 0 ? kExitClean : kExitUsage;
  }

  try {
    if (*cmd_gamma || *cmd_classify) {
      auto file = open_input(input);
      std::istream& in = file ? *file : std::cin;
      return *cmd_gamma ? run_gamma(in, variant) : run_classify(in, mode);
    }
    if (*cmd_verify)
      return run_verify_family(input, opt_condition_c, opt_build, opt_gamma_check);
    if (*scan_ex)
      return finish_scan(domina::scan_exhaustive(scan_n, parse_predicates(predicate_names)),
                         out_path, format, with_timing);
    if (*scan_sa)
      return finish_scan(domina::scan_sampled(scan_n, scan_p, scan_trials, scan_seed,
                                              parse_predicates(predicate_names)),
                         out_path, format, with_timing);
    if (*scan_co) {
      auto file = open_input(conjecture_file);
      std::istream& in = file ? *file : std::cin;
      return finish_scan(domina::conjecture_scan(in), out_path, format, with_timing);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

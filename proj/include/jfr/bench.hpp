#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jfr/algorithms.hpp"
#include "jfr/generators.hpp"
#include "jfr/metrics.hpp"
#include "jfr/verify.hpp"

namespace jfr::bench {

/// Runs `algo` `runs` times; returns the first result with wall_time_ns
/// replaced by the median over all runs. Op counts are deterministic.
SsspResult timed_run(Algorithm algo, const Graph& g, VertexId s, const RunOptions& opts,
                     std::size_t runs);

enum class Check { Pass, Fail, Skipped };
std::string_view to_string(Check c);

struct SuiteEntry {
  std::string label;  // graph id stem; defaults to family and size
  GenSpec spec;
};

struct SuiteSpec {
  std::string name = "suite";
  std::vector<SuiteEntry> entries;
  std::size_t repetitions = 1;  // generated instances per entry, seeds base_seed + i
  std::vector<Algorithm> algorithms;
  RunOptions options;
  std::uint64_t seed = 1;
  std::size_t timing_runs = 5;
  VertexId source = 0;
};

/// JSON suite description, e.g.
///   {"name": "desk", "repetitions": 30, "seed": 1, "k": 4,
///    "algorithms": ["slf", "jfr-pq"],
///    "graphs": [{"family": "slf-killer", "n": 2000}]}
SuiteSpec parse_suite_spec(std::string_view json_text);
SuiteSpec load_suite_spec(const std::string& path);

/// One (instance, algorithm) measurement.
struct ResultRow {
  std::string graph_id;
  std::string family;
  std::size_t entry = 0;
  std::size_t instance = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  Algorithm algorithm = Algorithm::BellmanFord;
  std::int64_t time_ns = 0;
  std::uint64_t edge_inspections = 0;
  std::uint64_t successful_relaxations = 0;
  std::uint64_t outer_iterations = 0;
  Check check = Check::Fail;
  std::string reason;
};

/// Per (entry, algorithm) aggregate: ops by mean, time by median.
struct SuiteRow {
  std::string graph;
  std::string family;
  std::size_t n = 0;
  double m = 0;
  Algorithm algorithm = Algorithm::BellmanFord;
  std::size_t instances = 0;
  double time_ms = 0;
  double ops = 0;
  double relaxations = 0;
  double outer_iterations = 0;
  Check check = Check::Fail;
  std::string reason;
};

struct ComparisonRow {
  std::string graph_id;
  std::string family;
  std::size_t instance = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  Algorithm baseline = Algorithm::SpfaSlf;
  Algorithm jfr = Algorithm::JfrPq;
  Comparison comparison;
};

struct SuiteReport {
  std::string name;
  std::vector<ResultRow> runs;
  std::vector<SuiteRow> rows;
  std::vector<ComparisonRow> comparisons;
};

/// Worker count from BENCH_THREADS (default: hardware concurrency).
std::size_t default_threads();

SuiteReport run_suite(const SuiteSpec& spec, std::size_t threads = default_threads());

std::string suite_csv(const SuiteReport& report);
std::string comparisons_csv(const SuiteReport& report);

std::string comparison_csv_header();
std::string comparison_csv_line(const ComparisonRow& row);

struct SweepSpec {
  std::vector<double> fractions;
  Algorithm algorithm = Algorithm::JfrPq;
  RunOptions options;
  std::size_t timing_runs = 1;
  double weight_lo = 1.0;
  double weight_hi = 100.0;
  VertexId source = 0;
  bool check = true;
};

struct SweepRow {
  std::uint64_t seed = 0;
  double fraction = 0;
  std::size_t n = 0;
  std::size_t m_base = 0;
  std::size_t m_aug = 0;
  std::uint64_t ops_base = 0;
  std::uint64_t ops_aug = 0;
  std::int64_t time_base_ns = 0;
  std::int64_t time_aug_ns = 0;
  Check check = Check::Skipped;

  [[nodiscard]] std::int64_t delta_edges() const {
    return static_cast<std::int64_t>(m_aug) - static_cast<std::int64_t>(m_base);
  }
  [[nodiscard]] std::int64_t delta_ops() const {
    return static_cast<std::int64_t>(ops_aug) - static_cast<std::int64_t>(ops_base);
  }
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t positive = 0;
};

/// Sweeps one graph. `potentials`, when given, keeps increments free of
/// negative cycles; a graph with negative weights requires them.
SweepReport sweep_graph(const Graph& g, const std::vector<double>* potentials,
                        const SweepSpec& spec, std::uint64_t seed);

/// Regenerates `seeds` instances of `base` (seed base.seed + i) and sweeps each.
SweepReport sweep_generated(const GenSpec& base, std::size_t seeds, const SweepSpec& spec);

std::string sweep_csv(const SweepReport& report);

/// Potentials p with w(u,v) - p(u) + p(v) >= 0 on every edge, from a
/// Bellman-Ford run off a virtual zero-weight source. Throws NegCycleResult
/// when the graph has a negative cycle.
std::vector<double> feasible_potentials(const Graph& g);

/// Full result serialisation for `run --result-out` and `verify`.
/// Unreachable distances are written as the string "inf".
std::string result_to_json(const SsspResult& r, Algorithm algo);
SsspResult result_from_json(std::string_view text);

std::string verify_report_json(const VerifyReport& r);

}  // namespace jfr::bench

#include "jfr/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "jfr/error.hpp"

namespace jfr::bench {

using json = nlohmann::json;

namespace {

template <typename T>
T median_of(std::vector<T> v) {
  if (v.empty()) return T{};
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  T hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  T lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return lo + (hi - lo) / 2;
}

std::string fmt(double x) { return format_weight(x); }

std::string default_label(const GenSpec& s) {
  std::ostringstream os;
  os << to_string(s.family);
  if (s.family == Family::Windmill) {
    os << "-b" << s.blades << "x" << s.blade_size;
  } else {
    os << "-n" << s.n;
    if (s.family != Family::SlfKiller) os << "-m" << s.m;
  }
  return os.str();
}

std::size_t nominal_n(const GenSpec& s) {
  if (s.family == Family::Windmill) {
    return s.blade_size == 0 ? 0 : s.blades * (s.blade_size - 1) + 1;
  }
  return s.n;
}

[[noreturn]] void spec_error(const std::string& what) {
  throw Error(ErrorCode::SpecInvalid, "suite spec: " + what);
}

GenSpec parse_graph_entry(const json& j, std::string& label) {
  if (!j.is_object()) spec_error("graph entries must be objects");
  GenSpec s;
  if (!j.contains("family")) spec_error("graph entry without family");
  s.family = parse_family(j.at("family").get<std::string>());
  s.n = j.value("n", std::size_t{0});
  s.m = j.value("m", std::size_t{0});
  s.weight_lo = j.value("weight_lo", s.weight_lo);
  s.weight_hi = j.value("weight_hi", s.weight_hi);
  s.neg_fraction = j.value("neg_fraction", s.family == Family::NegDense ? 0.4 : 0.0);
  s.blades = j.value("blades", std::size_t{0});
  s.blade_size = j.value("blade_size", std::size_t{0});
  label = j.value("label", std::string{});
  return s;
}

Check classify(const VerifyReport& r, std::string& reason) {
  if (r.distances_match && r.neg_cycle_agree) return Check::Pass;
  std::ostringstream os;
  if (!r.neg_cycle_agree) {
    os << "negative-cycle verdict differs";
  } else if (r.first_mismatch) {
    os << "dist[" << r.first_mismatch->vertex << "] expected " << fmt(r.first_mismatch->expected)
       << " got " << fmt(r.first_mismatch->actual);
  } else {
    os << "distance mismatch";
  }
  reason = os.str();
  return Check::Fail;
}

struct Task {
  std::size_t entry;
  std::size_t instance;
};

}  // namespace

SsspResult timed_run(Algorithm algo, const Graph& g, VertexId s, const RunOptions& opts,
                     std::size_t runs) {
  if (runs == 0) runs = 1;
  SsspResult first = run_algorithm(algo, g, s, opts);
  std::vector<std::int64_t> times{first.stats.wall_time_ns};
  for (std::size_t i = 1; i < runs; ++i) {
    times.push_back(run_algorithm(algo, g, s, opts).stats.wall_time_ns);
  }
  first.stats.wall_time_ns = median_of(std::move(times));
  return first;
}

std::string_view to_string(Check c) {
  switch (c) {
    case Check::Pass: return "PASS";
    case Check::Fail: return "FAIL";
    case Check::Skipped: return "SKIPPED";
  }
  return "?";
}

SuiteSpec parse_suite_spec(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    spec_error(e.what());
  }
  if (!j.is_object()) spec_error("top level must be an object");
  SuiteSpec spec;
  try {
    spec.name = j.value("name", spec.name);
    const auto reps = j.value("repetitions", std::int64_t{1});
    if (reps < 1) spec_error("repetitions must be >= 1");
    spec.repetitions = static_cast<std::size_t>(reps);
    spec.seed = j.value("seed", spec.seed);
    spec.options.strict_k = j.value("k", spec.options.strict_k);
    spec.options.pq.k = j.value("pq_k", spec.options.pq.k);
    spec.options.pq.filter_alpha = j.value("alpha", spec.options.pq.filter_alpha);
    spec.timing_runs = j.value("timing_runs", spec.timing_runs);
    spec.source = j.value("source", spec.source);
    if (!j.contains("algorithms") || !j["algorithms"].is_array()) {
      spec_error("algorithms must be a non-empty array");
    }
    for (const auto& a : j["algorithms"]) spec.algorithms.push_back(parse_algorithm(a.get<std::string>()));
    if (spec.algorithms.empty()) spec_error("at least one algorithm is required");
    if (!j.contains("graphs") || !j["graphs"].is_array() || j["graphs"].empty()) {
      spec_error("graphs must be a non-empty array");
    }
    for (const auto& g : j["graphs"]) {
      SuiteEntry e;
      e.spec = parse_graph_entry(g, e.label);
      if (e.label.empty()) e.label = default_label(e.spec);
      spec.entries.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    spec_error(e.what());
  }
  if (spec.options.strict_k == 0) spec_error("k must be >= 1");
  validate(spec.options.pq);
  return spec;
}

SuiteSpec load_suite_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_suite_spec(ss.str());
}

std::size_t default_threads() {
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BENCH_THREADS")) {
    std::size_t cap = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [p, ec] = std::from_chars(env, end, cap);
    if (ec == std::errc{} && p == end && cap > 0) return std::min(hw, cap);
  }
  return hw;
}

SuiteReport run_suite(const SuiteSpec& spec, std::size_t threads) {
  if (spec.algorithms.empty() || spec.repetitions == 0 || spec.entries.empty()) {
    spec_error("empty suite");
  }
  std::vector<Task> tasks;
  for (std::size_t e = 0; e < spec.entries.size(); ++e) {
    for (std::size_t i = 0; i < spec.repetitions; ++i) tasks.push_back({e, i});
  }
  const std::size_t per_task = spec.algorithms.size();
  std::vector<ResultRow> runs(tasks.size() * per_task);
  std::vector<std::vector<ComparisonRow>> comps(tasks.size());

  const auto pick = [&](std::initializer_list<Algorithm> order) -> std::optional<std::size_t> {
    for (Algorithm a : order) {
      auto it = std::find(spec.algorithms.begin(), spec.algorithms.end(), a);
      if (it != spec.algorithms.end()) return static_cast<std::size_t>(it - spec.algorithms.begin());
    }
    return std::nullopt;
  };
  const auto base_idx = pick({Algorithm::SpfaSlf, Algorithm::SpfaFifo, Algorithm::BellmanFord});

  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr failure;

  const auto work = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      try {
        const SuiteEntry& entry = spec.entries[tasks[t].entry];
        GenSpec gs = entry.spec;
        gs.seed = spec.seed + tasks[t].instance;
        const Graph g = generate(gs);
        const std::string id = entry.label + "-s" + std::to_string(gs.seed);
        const SsspResult oracle = bellman_ford(g, spec.source);
        std::vector<SsspResult> results(per_task);
        for (std::size_t a = 0; a < per_task; ++a) {
          ResultRow& row = runs[t * per_task + a];
          row.graph_id = id;
          row.family = std::string(to_string(gs.family));
          row.entry = tasks[t].entry;
          row.instance = tasks[t].instance;
          row.seed = gs.seed;
          row.n = g.num_vertices();
          row.m = g.num_edges();
          row.algorithm = spec.algorithms[a];
          try {
            results[a] = timed_run(row.algorithm, g, spec.source, spec.options, spec.timing_runs);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::NegativeWeightPresent) throw;
            row.check = Check::Skipped;
            row.reason = "negative weights present";
            continue;
          }
          const RunStats& st = results[a].stats;
          row.time_ns = st.wall_time_ns;
          row.edge_inspections = st.edge_inspections;
          row.successful_relaxations = st.successful_relaxations;
          row.outer_iterations = st.outer_iterations;
          row.check = classify(oracle_compare(g, spec.source, results[a], oracle), row.reason);
        }
        if (base_idx) {
          const ResultRow& base = runs[t * per_task + *base_idx];
          for (std::size_t a = 0; a < per_task; ++a) {
            const Algorithm algo = spec.algorithms[a];
            if (algo != Algorithm::JfrPq && algo != Algorithm::JfrStrict) continue;
            const ResultRow& jr = runs[t * per_task + a];
            if (base.edge_inspections == 0 || jr.edge_inspections == 0) continue;
            ComparisonRow c;
            c.graph_id = id;
            c.family = base.family;
            c.instance = base.instance;
            c.seed = base.seed;
            c.n = base.n;
            c.m = base.m;
            c.baseline = base.algorithm;
            c.jfr = algo;
            c.comparison = compare(results[*base_idx].stats, results[a].stats);
            comps[t].push_back(c);
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  threads = std::clamp<std::size_t>(threads, 1, tasks.size());
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SuiteReport report;
  report.name = spec.name;
  report.runs = std::move(runs);
  for (auto& c : comps) {
    report.comparisons.insert(report.comparisons.end(), c.begin(), c.end());
  }

  for (std::size_t e = 0; e < spec.entries.size(); ++e) {
    for (std::size_t a = 0; a < per_task; ++a) {
      SuiteRow row;
      row.graph = spec.entries[e].label;
      row.family = std::string(to_string(spec.entries[e].spec.family));
      row.n = nominal_n(spec.entries[e].spec);
      row.algorithm = spec.algorithms[a];
      std::vector<std::int64_t> times;
      double m_sum = 0, ops = 0, rel = 0, outer = 0;
      std::size_t fails = 0, skips = 0;
      std::string reason;
      for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (tasks[t].entry != e) continue;
        const ResultRow& r = report.runs[t * per_task + a];
        m_sum += static_cast<double>(r.m);
        row.n = r.n;
        if (r.check == Check::Skipped) {
          ++skips;
          reason = r.reason;
          continue;
        }
        if (r.check == Check::Fail) {
          ++fails;
          if (reason.empty()) reason = r.graph_id + ": " + r.reason;
        }
        times.push_back(r.time_ns);
        ops += static_cast<double>(r.edge_inspections);
        rel += static_cast<double>(r.successful_relaxations);
        outer += static_cast<double>(r.outer_iterations);
      }
      row.m = m_sum / static_cast<double>(spec.repetitions);
      row.instances = times.size();
      if (!times.empty()) {
        const double cnt = static_cast<double>(times.size());
        row.time_ms = static_cast<double>(median_of(times)) / 1e6;
        row.ops = ops / cnt;
        row.relaxations = rel / cnt;
        row.outer_iterations = outer / cnt;
      }
      if (fails > 0) {
        row.check = Check::Fail;
      } else if (skips > 0) {
        row.check = Check::Skipped;
      } else {
        row.check = Check::Pass;
      }
      row.reason = reason;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string suite_csv(const SuiteReport& report) {
  std::ostringstream os;
  os << "#schema=1 suite=" << report.name << "\n";
  os << "graph,family,n,m,algorithm,instances,time_ms,ops,relaxations,outer_iterations,check,"
        "reason\n";
  for (const SuiteRow& r : report.rows) {
    os << r.graph << ',' << r.family << ',' << r.n << ',' << fmt(r.m) << ','
       << to_string(r.algorithm) << ',' << r.instances << ',' << fmt(r.time_ms) << ','
       << fmt(r.ops) << ',' << fmt(r.relaxations) << ',' << fmt(r.outer_iterations) << ','
       << to_string(r.check) << ',';
    std::string reason = r.reason;
    std::replace(reason.begin(), reason.end(), ',', ';');
    os << reason << "\n";
  }
  return os.str();
}

std::string comparison_csv_header() {
  return "graph,family,n,m,seed,baseline,jfr,ops_base,ops_jfr,time_base_ns,time_jfr_ns,rho_ops,"
         "rho_tpr,nwr,predicted_speedup,observed_speedup";
}

std::string comparison_csv_line(const ComparisonRow& row) {
  const Comparison& c = row.comparison;
  std::ostringstream os;
  os << row.graph_id << ',' << row.family << ',' << row.n << ',' << row.m << ',' << row.seed << ','
     << to_string(row.baseline) << ',' << to_string(row.jfr) << ',' << c.ops_base << ','
     << c.ops_jfr << ',' << c.time_base_ns << ',' << c.time_jfr_ns << ',' << fmt(c.rho_ops) << ','
     << fmt(c.rho_tpr) << ',' << fmt(c.nwr) << ',' << (c.predicted_speedup ? 1 : 0) << ','
     << (c.observed_speedup ? 1 : 0);
  return os.str();
}

std::string comparisons_csv(const SuiteReport& report) {
  std::ostringstream os;
  os << "#schema=1 comparisons suite=" << report.name << "\n" << comparison_csv_header() << "\n";
  for (const auto& c : report.comparisons) os << comparison_csv_line(c) << "\n";
  return os.str();
}

SweepReport sweep_graph(const Graph& g, const std::vector<double>* potentials,
                        const SweepSpec& spec, std::uint64_t seed) {
  if (spec.fractions.empty()) {
    throw Error(ErrorCode::SpecInvalid, "sweep needs at least one fraction");
  }
  for (double f : spec.fractions) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw Error(ErrorCode::SpecInvalid, "fractions must lie in (0, 1]");
    }
  }
  const bool neg_safe = g.has_negative_weight();
  if (neg_safe && potentials == nullptr) {
    throw Error(ErrorCode::PotentialUnavailable,
                "graph has negative weights but no potentials to keep increments safe");
  }
  SweepReport rep;
  const SsspResult base =
      timed_run(spec.algorithm, g, spec.source, spec.options, spec.timing_runs);
  for (std::size_t i = 0; i < spec.fractions.size(); ++i) {
    EdgeIncrement inc;
    inc.fraction = spec.fractions[i];
    inc.weight_lo = spec.weight_lo;
    inc.weight_hi = spec.weight_hi;
    inc.seed = seed * 1000003u + i + 1;
    inc.neg_safe = neg_safe;
    const Graph aug = add_edges(g, inc, neg_safe ? potentials : nullptr);
    const SsspResult r =
        timed_run(spec.algorithm, aug, spec.source, spec.options, spec.timing_runs);
    SweepRow row;
    row.seed = seed;
    row.fraction = inc.fraction;
    row.n = g.num_vertices();
    row.m_base = g.num_edges();
    row.m_aug = aug.num_edges();
    row.ops_base = base.stats.edge_inspections;
    row.ops_aug = r.stats.edge_inspections;
    row.time_base_ns = base.stats.wall_time_ns;
    row.time_aug_ns = r.stats.wall_time_ns;
    if (spec.check) {
      const VerifyReport v = oracle_compare(aug, spec.source, r);
      row.check = v.distances_match && v.neg_cycle_agree ? Check::Pass : Check::Fail;
    }
    const auto d = row.delta_ops();
    (d < 0 ? rep.negative : d == 0 ? rep.zero : rep.positive) += 1;
    rep.rows.push_back(row);
  }
  return rep;
}

std::vector<double> feasible_potentials(const Graph& g) {
  const std::size_t n = g.num_vertices();
  EdgeListDoc doc = g.to_edge_list();
  for (VertexId v = 0; v < n; ++v) doc.edges.push_back({static_cast<VertexId>(n), v, 0.0});
  doc.n = n + 1;
  const SsspResult r = bellman_ford(Graph::from_edge_list(doc), static_cast<VertexId>(n));
  if (r.neg_cycle) throw Error(ErrorCode::NegCycleResult, "graph has a negative cycle");
  std::vector<double> p(n);
  for (VertexId v = 0; v < n; ++v) p[v] = -r.dist[v];
  return p;
}

SweepReport sweep_generated(const GenSpec& base, std::size_t seeds, const SweepSpec& spec) {
  if (seeds == 0) throw Error(ErrorCode::SpecInvalid, "seeds must be >= 1");
  SweepReport all;
  for (std::size_t i = 0; i < seeds; ++i) {
    GenSpec gs = base;
    gs.seed = base.seed + i;
    SweepReport one;
    if (gs.family == Family::NegDense) {
      const PotentialGraph pg = gen_neg_dense_with_potentials(gs);
      one = sweep_graph(pg.graph, &pg.potentials, spec, gs.seed);
    } else {
      one = sweep_graph(generate(gs), nullptr, spec, gs.seed);
    }
    all.rows.insert(all.rows.end(), one.rows.begin(), one.rows.end());
    all.negative += one.negative;
    all.zero += one.zero;
    all.positive += one.positive;
  }
  return all;
}

std::string sweep_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "#schema=1 sweep-edges\n";
  os << "seed,fraction,n,m_base,m_aug,delta_edges,time_base_ms,time_aug_ms,ops_base,ops_aug,"
        "delta_ops,check\n";
  for (const SweepRow& r : report.rows) {
    os << r.seed << ',' << fmt(r.fraction) << ',' << r.n << ',' << r.m_base << ',' << r.m_aug << ','
       << r.delta_edges() << ',' << fmt(static_cast<double>(r.time_base_ns) / 1e6) << ','
       << fmt(static_cast<double>(r.time_aug_ns) / 1e6) << ',' << r.ops_base << ',' << r.ops_aug
       << ',' << r.delta_ops() << ',' << to_string(r.check) << "\n";
  }
  os << "#delta_ops negative=" << report.negative << " zero=" << report.zero
     << " positive=" << report.positive << "\n";
  return os.str();
}

std::string result_to_json(const SsspResult& r, Algorithm algo) {
  json j;
  j["algorithm"] = std::string(to_string(algo));
  j["source"] = r.source;
  j["neg_cycle"] = r.neg_cycle;
  json dist = json::array();
  for (double d : r.dist) {
    if (d == kInfinity) {
      dist.push_back("inf");
    } else {
      dist.push_back(d);
    }
  }
  json parent = json::array();
  for (VertexId p : r.parent) {
    if (p == kNoVertex) {
      parent.push_back(-1);
    } else {
      parent.push_back(p);
    }
  }
  j["dist"] = std::move(dist);
  j["parent"] = std::move(parent);
  return j.dump();
}

SsspResult result_from_json(std::string_view text) {
  SsspResult r;
  try {
    const json j = json::parse(text);
    r.source = j.at("source").get<VertexId>();
    r.neg_cycle = j.value("neg_cycle", false);
    for (const auto& d : j.at("dist")) {
      if (d.is_string()) {
        if (d.get<std::string>() != "inf") throw Error(ErrorCode::ParseError, "bad distance");
        r.dist.push_back(kInfinity);
      } else {
        r.dist.push_back(d.get<double>());
      }
    }
    for (const auto& p : j.at("parent")) {
      const auto v = p.get<std::int64_t>();
      r.parent.push_back(v < 0 ? kNoVertex : static_cast<VertexId>(v));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("result file: ") + e.what());
  }
  if (r.dist.size() != r.parent.size()) {
    throw Error(ErrorCode::ParseError, "result file: dist and parent lengths differ");
  }
  return r;
}

std::string verify_report_json(const VerifyReport& r) {
  json j;
  j["distances_match"] = r.distances_match;
  j["triangle_ok"] = r.triangle_ok;
  j["parent_ok"] = r.parent_ok;
  j["neg_cycle_agree"] = r.neg_cycle_agree;
  j["all_ok"] = r.all_ok();
  if (r.first_mismatch) {
    const auto enc = [](double x) { return x == kInfinity ? json("inf") : json(x); };
    j["first_mismatch"] = {{"vertex", r.first_mismatch->vertex},
                           {"expected", enc(r.first_mismatch->expected)},
                           {"actual", enc(r.first_mismatch->actual)}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j.dump();
}

}  // namespace jfr::bench

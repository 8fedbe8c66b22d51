#include "jfr/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jfr/bench.hpp"
#include "jfr/error.hpp"

namespace jfr::cli {

namespace {

using nlohmann::json;

struct GenFlags {
  std::string family;
  std::optional<std::size_t> n;
  std::size_t m = 0;
  double weight_lo = 1.0;
  double weight_hi = 100.0;
  double neg_fraction = 0.0;
  std::size_t blades = 0;
  std::size_t blade_size = 0;
  std::uint64_t seed = 1;
};

void add_gen_flags(CLI::App* app, GenFlags& f, bool family_required) {
  auto* fam = app->add_option("--family", f.family, "sparse-random | neg-dense | windmill | slf-killer");
  if (family_required) fam->required();
  app->add_option("--n", f.n, "vertex count");
  app->add_option("--m", f.m, "edge count (sparse-random, neg-dense)");
  app->add_option("--weight-lo", f.weight_lo, "lowest base weight");
  app->add_option("--weight-hi", f.weight_hi, "highest base weight");
  app->add_option("--neg-fraction", f.neg_fraction, "target share of negative edges (neg-dense)");
  app->add_option("--blades", f.blades, "windmill blade count");
  app->add_option("--blade-size", f.blade_size, "vertices per blade, hub included");
  app->add_option("--seed", f.seed, "generator seed");
}

GenSpec to_spec(const GenFlags& f, const CLI::App& app) {
  GenSpec s;
  s.family = parse_family(f.family);
  if (s.family != Family::Windmill && !f.n) {
    throw Error(ErrorCode::SpecInvalid, "--n is required for " + f.family + "\n" + app.help());
  }
  if (s.family == Family::Windmill && (f.blades == 0 || f.blade_size == 0)) {
    throw Error(ErrorCode::SpecInvalid, "windmill needs --blades and --blade-size\n" + app.help());
  }
  s.n = f.n.value_or(0);
  s.m = f.m;
  s.weight_lo = f.weight_lo;
  s.weight_hi = f.weight_hi;
  s.neg_fraction = f.neg_fraction;
  s.blades = f.blades;
  s.blade_size = f.blade_size;
  s.seed = f.seed;
  return s;
}

struct AlgoFlags {
  unsigned k = 4;
  unsigned pq_k = 2;
  double alpha = 0.1;
  std::uint32_t window = 8;
  std::uint32_t period = 64;
};

void add_algo_flags(CLI::App* app, AlgoFlags& f) {
  app->add_option("--k", f.k, "LMH depth for jfr-strict");
  app->add_option("--pq-k", f.pq_k, "LMH depth for jfr-pq");
  app->add_option("--alpha", f.alpha, "frontier filter threshold as a share of n");
  app->add_option("--window", f.window, "stability window in selections");
  app->add_option("--filter-period", f.period, "pops between filter passes");
}

RunOptions to_options(const AlgoFlags& f) {
  RunOptions o;
  o.strict_k = f.k;
  if (f.k == 0) throw Error(ErrorCode::SpecInvalid, "--k must be >= 1");
  o.pq.k = f.pq_k;
  o.pq.filter_alpha = f.alpha;
  o.pq.stability_window = f.window;
  o.pq.filter_period = f.period;
  validate(o.pq);
  return o;
}

Graph load_graph(const std::string& path) { return Graph::from_edge_list(read_text_file(path)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"JFR shortest-path benchmark tool", "jfr_bench"};
  app.require_subcommand(1);

  // gen
  GenFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a graph in edge-list text format");
  add_gen_flags(gen, gen_flags, true);
  gen->add_option("-o,--out", gen_out, "output file (stdout when omitted)");

  // run
  std::string run_graph, run_algo = "jfr-pq", run_result_out;
  VertexId run_source = 0;
  bool run_check = false;
  std::size_t run_reps = 1;
  AlgoFlags run_flags;
  auto* runc = app.add_subcommand("run", "run one algorithm on a graph file");
  runc->add_option("graph", run_graph, "graph file")->required();
  runc->add_option("--algo", run_algo, "bf | spfa | slf | dijkstra | jfr-strict | jfr-pq");
  runc->add_option("--source", run_source, "source vertex");
  runc->add_flag("--check", run_check, "compare against Bellman-Ford");
  runc->add_option("--repetitions", run_reps, "timed runs; time_ns is their median")
      ->check(CLI::PositiveNumber);
  runc->add_option("--result-out", run_result_out, "write dist and parent as JSON");
  add_algo_flags(runc, run_flags);

  // compare
  std::string cmp_graph, cmp_base = "slf", cmp_jfr = "jfr-pq";
  VertexId cmp_source = 0;
  std::size_t cmp_reps = 1;
  bool cmp_no_header = false;
  AlgoFlags cmp_flags;
  auto* cmp = app.add_subcommand("compare", "baseline versus JFR on one graph");
  cmp->add_option("graph", cmp_graph, "graph file")->required();
  cmp->add_option("--base", cmp_base, "baseline algorithm");
  cmp->add_option("--jfr", cmp_jfr, "algorithm compared against the baseline");
  cmp->add_option("--source", cmp_source, "source vertex");
  cmp->add_option("--repetitions", cmp_reps, "timed runs per side")->check(CLI::PositiveNumber);
  cmp->add_flag("--no-header", cmp_no_header, "omit the CSV header lines");
  add_algo_flags(cmp, cmp_flags);

  // suite
  std::string suite_path, suite_out, suite_cmp;
  std::size_t suite_threads = 0;
  auto* suite = app.add_subcommand("suite", "run a JSON suite and emit the results table");
  suite->add_option("spec", suite_path, "suite JSON")->required();
  suite->add_option("-o,--out", suite_out, "table CSV (stdout when omitted)");
  suite->add_option("--comparisons", suite_cmp, "per-instance comparison CSV");
  suite->add_option("--threads", suite_threads, "worker threads (default BENCH_THREADS)");

  // sweep-edges
  std::string sw_graph, sw_algo = "jfr-pq", sw_out;
  GenFlags sw_gen;
  std::vector<double> sw_fractions;
  std::size_t sw_seeds = 1, sw_reps = 1;
  VertexId sw_source = 0;
  std::optional<double> sw_lo, sw_hi;
  bool sw_no_check = false;
  AlgoFlags sw_flags;
  auto* sweep = app.add_subcommand("sweep-edges", "ops before and after small edge increments");
  sweep->add_option("graph", sw_graph, "graph file; generate from flags when omitted");
  add_gen_flags(sweep, sw_gen, false);
  sweep->add_option("--fractions", sw_fractions, "increment fractions, e.g. 0.05,0.1")
      ->delimiter(',')
      ->required();
  sweep->add_option("--algo", sw_algo, "algorithm to measure");
  sweep->add_option("--seeds", sw_seeds, "generated instances, seeds seed..seed+count-1");
  sweep->add_option("--repetitions", sw_reps, "timed runs per measurement");
  sweep->add_option("--source", sw_source, "source vertex");
  sweep->add_option("--inc-lo", sw_lo, "lowest base weight of new edges");
  sweep->add_option("--inc-hi", sw_hi, "highest base weight of new edges");
  sweep->add_flag("--no-check", sw_no_check, "skip the oracle on augmented graphs");
  sweep->add_option("-o,--out", sw_out, "CSV file (stdout when omitted)");
  add_algo_flags(sweep, sw_flags);

  // verify
  std::string vf_graph, vf_result;
  std::optional<VertexId> vf_source;
  auto* verify = app.add_subcommand("verify", "check a saved result against the oracle");
  verify->add_option("graph", vf_graph, "graph file")->required();
  verify->add_option("--result", vf_result, "result JSON from run --result-out")->required();
  verify->add_option("--source", vf_source, "source vertex (default: the one in the result)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen) {
      const GenSpec spec = to_spec(gen_flags, *gen);
      const Graph g = generate(spec);
      const EdgeListDoc doc = g.to_edge_list();
      std::ostream& info = gen_out.empty() ? err : out;
      if (gen_out.empty()) {
        out << write_text(doc);
      } else {
        write_text_file(gen_out, doc);
      }
      info << "n=" << g.num_vertices() << " m=" << g.num_edges() << " seed=" << spec.seed << "\n";
      return kExitOk;
    }

    if (*runc) {
      const Algorithm algo = parse_algorithm(run_algo);
      const Graph g = load_graph(run_graph);
      const SsspResult r = bench::timed_run(algo, g, run_source, to_options(run_flags), run_reps);
      json j;
      j["graph"] = run_graph;
      j["n"] = g.num_vertices();
      j["m"] = g.num_edges();
      j["algorithm"] = std::string(to_string(algo));
      j["source"] = run_source;
      j["time_ns"] = r.stats.wall_time_ns;
      j["edge_inspections"] = r.stats.edge_inspections;
      j["successful_relaxations"] = r.stats.successful_relaxations;
      j["outer_iterations"] = r.stats.outer_iterations;
      j["lmh_inspections"] = r.stats.lmh_inspections;
      j["neg_cycle"] = r.neg_cycle;
      int code = kExitOk;
      if (run_check) {
        const VerifyReport rep = oracle_compare(g, run_source, r);
        const bool ok = rep.distances_match && rep.neg_cycle_agree;
        j["check"] = ok ? "PASS" : "FAIL";
        if (!ok) code = kExitCheckFailed;
      } else {
        j["check"] = nullptr;
      }
      if (!run_result_out.empty()) write_file(run_result_out, bench::result_to_json(r, algo) + "\n");
      out << j.dump() << "\n";
      return code;
    }

    if (*cmp) {
      const Algorithm base = parse_algorithm(cmp_base);
      const Algorithm jalgo = parse_algorithm(cmp_jfr);
      const Graph g = load_graph(cmp_graph);
      const RunOptions opts = to_options(cmp_flags);
      const SsspResult rb = bench::timed_run(base, g, cmp_source, opts, cmp_reps);
      const SsspResult rj = bench::timed_run(jalgo, g, cmp_source, opts, cmp_reps);
      bench::ComparisonRow row;
      row.graph_id = cmp_graph;
      row.family = "file";
      row.n = g.num_vertices();
      row.m = g.num_edges();
      row.baseline = base;
      row.jfr = jalgo;
      row.comparison = compare(rb.stats, rj.stats);
      if (!cmp_no_header) out << "#schema=1 compare\n" << bench::comparison_csv_header() << "\n";
      out << bench::comparison_csv_line(row) << "\n";
      return kExitOk;
    }

    if (*suite) {
      const bench::SuiteSpec spec = bench::load_suite_spec(suite_path);
      const bench::SuiteReport rep =
          bench::run_suite(spec, suite_threads > 0 ? suite_threads : bench::default_threads());
      const std::string table = bench::suite_csv(rep);
      if (suite_out.empty()) {
        out << table;
      } else {
        write_file(suite_out, table);
      }
      if (!suite_cmp.empty()) write_file(suite_cmp, bench::comparisons_csv(rep));
      for (const auto& row : rep.rows) {
        if (row.check == bench::Check::Fail) return kExitCheckFailed;
      }
      return kExitOk;
    }

    if (*sweep) {
      bench::SweepSpec spec;
      spec.fractions = sw_fractions;
      spec.algorithm = parse_algorithm(sw_algo);
      spec.options = to_options(sw_flags);
      spec.timing_runs = sw_reps;
      spec.source = sw_source;
      spec.check = !sw_no_check;
      bench::SweepReport rep;
      if (!sw_graph.empty()) {
        const Graph g = load_graph(sw_graph);
        spec.weight_lo = sw_lo.value_or(sw_gen.weight_lo);
        spec.weight_hi = sw_hi.value_or(sw_gen.weight_hi);
        std::vector<double> pot;
        if (g.has_negative_weight()) pot = bench::feasible_potentials(g);
        rep = bench::sweep_graph(g, pot.empty() ? nullptr : &pot, spec, sw_gen.seed);
      } else {
        if (sw_gen.family.empty()) {
          throw Error(ErrorCode::SpecInvalid, "give a graph file or --family\n" + sweep->help());
        }
        const GenSpec gs = to_spec(sw_gen, *sweep);
        spec.weight_lo = sw_lo.value_or(gs.weight_lo);
        spec.weight_hi = sw_hi.value_or(gs.weight_hi);
        rep = bench::sweep_generated(gs, sw_seeds, spec);
      }
      const std::string csv = bench::sweep_csv(rep);
      if (sw_out.empty()) {
        out << csv;
      } else {
        write_file(sw_out, csv);
        out << "delta_ops negative=" << rep.negative << " zero=" << rep.zero
            << " positive=" << rep.positive << "\n";
      }
      for (const auto& row : rep.rows) {
        if (row.check == bench::Check::Fail) return kExitCheckFailed;
      }
      return kExitOk;
    }

    if (*verify) {
      const Graph g = load_graph(vf_graph);
      const SsspResult r = bench::result_from_json(read_file(vf_result));
      const VertexId s = vf_source.value_or(r.source);
      VerifyReport rep;
      if (r.dist.size() != g.num_vertices()) {
        rep.distances_match = rep.triangle_ok = rep.parent_ok = false;
      } else {
        rep = oracle_compare(g, s, r);
      }
      out << bench::verify_report_json(rep) << "\n";
      return rep.all_ok() ? kExitOk : kExitCheckFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace jfr::cli

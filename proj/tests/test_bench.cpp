#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jfr/bench.hpp"
#include "jfr/cli.hpp"

using namespace jfr;
using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& line, char sep = ',') {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

// CSV with every time column blanked, for byte comparisons of op columns.
std::string without_times(const std::string& csv) {
  std::string out;
  std::vector<std::size_t> blank;
  bool header = true;
  for (const auto& l : lines(csv)) {
    auto cells = split(l);
    if (l[0] != '#') {
      if (header) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (cells[i].find("time") != std::string::npos) blank.push_back(i);
        }
        header = false;
      } else {
        for (std::size_t i : blank) cells[i] = "-";
      }
    }
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
    out += "\n";
  }
  return out;
}

struct Cli {
  int code = 0;
  std::string out;
  std::string err;
};

Cli invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "jfr_bench");
  std::ostringstream out, err;
  Cli r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("jfr_test_" + name)).string();
}

const char* kSmallSuite = R"({
  "name": "small", "repetitions": 3, "seed": 10, "timing_runs": 1,
  "algorithms": ["bf", "slf", "jfr-strict", "jfr-pq", "dijkstra"],
  "graphs": [
    {"family": "sparse-random", "n": 300, "m": 1200},
    {"family": "neg-dense", "n": 100, "m": 2000, "neg_fraction": 0.4},
    {"family": "windmill", "blades": 5, "blade_size": 6},
    {"family": "slf-killer", "n": 200}
  ]
})";

}  // namespace

TEST_CASE("suite spec parsing") {
  const bench::SuiteSpec s = bench::parse_suite_spec(kSmallSuite);
  CHECK(s.name == "small");
  CHECK(s.repetitions == 3);
  CHECK(s.seed == 10);
  CHECK(s.entries.size() == 4);
  CHECK(s.algorithms.size() == 5);
  CHECK(s.entries[1].spec.family == Family::NegDense);
  CHECK(s.entries[1].label == "neg-dense-n100-m2000");

  const auto invalid = [](const char* text) {
    try {
      (void)bench::parse_suite_spec(text);
    } catch (const Error& e) {
      return e.code() == ErrorCode::SpecInvalid || e.code() == ErrorCode::UnknownAlgorithm;
    }
    return false;
  };
  CHECK(invalid("not json"));
  CHECK(invalid(R"({"repetitions": 0, "algorithms": ["bf"], "graphs": [{"family": "windmill"}]})"));
  CHECK(invalid(R"({"algorithms": [], "graphs": [{"family": "sparse", "n": 3}]})"));
  CHECK(invalid(R"({"algorithms": ["bf"], "graphs": []})"));
  CHECK(invalid(R"({"algorithms": ["warp"], "graphs": [{"family": "sparse", "n": 3}]})"));
  CHECK(invalid(R"({"algorithms": ["bf"], "graphs": [{"family": "torus", "n": 3}]})"));
}

TEST_CASE("suite run: checks, skips, comparisons, determinism") {
  const bench::SuiteSpec spec = bench::parse_suite_spec(kSmallSuite);
  const bench::SuiteReport a = bench::run_suite(spec, 3);
  const bench::SuiteReport b = bench::run_suite(spec, 1);
  REQUIRE(a.rows.size() == 4 * 5);
  for (const auto& row : a.rows) {
    CAPTURE(row.graph);
    CAPTURE(to_string(row.algorithm));
    const bool skip = row.algorithm == Algorithm::Dijkstra && row.family == "neg-dense";
    if (skip) {
      CHECK(row.check == bench::Check::Skipped);
      CHECK(row.reason == "negative weights present");
      CHECK(row.instances == 0);
    } else {
      CHECK(row.check == bench::Check::Pass);
      CHECK(row.instances == 3);
    }
  }
  // slf baseline versus both JFR modes, every instance
  CHECK(a.comparisons.size() == 4 * 3 * 2);
  for (const auto& c : a.comparisons) {
    CHECK(c.baseline == Algorithm::SpfaSlf);
    CHECK(std::abs(c.comparison.rho_ops * c.comparison.nwr - 1.0) <= 1e-12);
    CHECK(c.comparison.predicted_speedup == c.comparison.observed_speedup);
  }

  const std::string csv = bench::suite_csv(a);
  CHECK(csv.rfind("#schema=1", 0) == 0);
  CHECK(lines(csv)[1] ==
        "graph,family,n,m,algorithm,instances,time_ms,ops,relaxations,outer_iterations,check,reason");
  CHECK(without_times(csv) == without_times(bench::suite_csv(b)));
  CHECK(bench::comparisons_csv(a).rfind("#schema=1", 0) == 0);

  // instance seeds are base + i
  for (const auto& r : a.runs) CHECK(r.seed == spec.seed + r.instance);
}

TEST_CASE("repetitions=1 means equal single-run values") {
  bench::SuiteSpec spec = bench::parse_suite_spec(R"({
    "repetitions": 1, "seed": 4, "timing_runs": 1, "algorithms": ["slf", "jfr-pq"],
    "graphs": [{"family": "neg-dense", "n": 120, "m": 900}]})");
  const bench::SuiteReport rep = bench::run_suite(spec, 1);
  GenSpec gs = spec.entries[0].spec;
  gs.seed = 4;
  const Graph g = generate(gs);
  CHECK(rep.rows[0].ops == static_cast<double>(spfa_slf(g, 0).stats.edge_inspections));
  CHECK(rep.rows[1].ops == static_cast<double>(jfr_pq(g, 0).stats.edge_inspections));
  CHECK(rep.rows[1].relaxations ==
        static_cast<double>(jfr_pq(g, 0).stats.successful_relaxations));
}

TEST_CASE("timed_run takes the median time and keeps op counts") {
  const Graph g = gen_slf_killer(300, 2);
  const SsspResult r = bench::timed_run(Algorithm::SpfaSlf, g, 0, {}, 5);
  CHECK(r.stats.edge_inspections == spfa_slf(g, 0).stats.edge_inspections);
  CHECK(r.stats.wall_time_ns > 0);
}

TEST_CASE("sweep") {
  bench::SweepSpec spec;
  SUBCASE("empty fraction list") {
    CHECK_THROWS_AS(bench::sweep_graph(gen_slf_killer(50, 1), nullptr, spec, 1), Error);
  }
  SUBCASE("tiny fraction adds exactly one edge") {
    spec.fractions = {0.000001};
    const bench::SweepReport r = bench::sweep_graph(gen_slf_killer(50, 1), nullptr, spec, 1);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].delta_edges() == 1);
    CHECK(r.rows[0].check == bench::Check::Pass);
  }
  SUBCASE("negative weights need potentials") {
    spec.fractions = {0.1};
    const Graph g = Graph::from_edge_list({3, {{0, 1, -1.0}, {1, 2, 2.0}}});
    try {
      (void)bench::sweep_graph(g, nullptr, spec, 1);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PotentialUnavailable);
    }
    const auto p = bench::feasible_potentials(g);
    const bench::SweepReport r = bench::sweep_graph(g, &p, spec, 1);
    CHECK(r.rows[0].check == bench::Check::Pass);
  }
  SUBCASE("generated neg-dense") {
    spec.fractions = {0.05, 0.10, 0.15};
    GenSpec gs;
    gs.family = Family::NegDense;
    gs.n = 100;
    gs.m = 3000;
    gs.neg_fraction = 0.4;
    gs.seed = 1;
    const bench::SweepReport r = bench::sweep_generated(gs, 4, spec);
    CHECK(r.rows.size() == 12);
    CHECK(r.negative + r.zero + r.positive == 12);
    for (const auto& row : r.rows) {
      CHECK(row.check == bench::Check::Pass);
      CHECK(row.m_base == 3000);
    }
    CHECK(r.rows[1].delta_edges() == 300);
    const auto csv = bench::sweep_csv(r);
    CHECK(csv.rfind("#schema=1", 0) == 0);
    CHECK(csv.find("#delta_ops negative=") != std::string::npos);
    CHECK(without_times(csv) == without_times(bench::sweep_csv(bench::sweep_generated(gs, 4, spec))));
  }
}

TEST_CASE("feasible potentials") {
  const Graph g = Graph::from_edge_list({3, {{0, 1, -1.0}, {1, 2, -2.5}, {2, 0, 4.0}}});
  const auto p = bench::feasible_potentials(g);
  for (const auto& e : g.to_edge_list().edges) CHECK(e.weight - p[e.tail] + p[e.head] >= 0.0);
  const Graph cyc = Graph::from_edge_list({2, {{0, 1, 1.0}, {1, 0, -2.0}}});
  CHECK_THROWS_AS((void)bench::feasible_potentials(cyc), Error);
}

TEST_CASE("result json round trip") {
  const Graph g = Graph::from_edge_list({4, {{0, 1, 0.5}, {1, 2, -0.25}}});
  const SsspResult r = bellman_ford(g, 0);
  const SsspResult back = bench::result_from_json(bench::result_to_json(r, Algorithm::BellmanFord));
  CHECK(back.dist == r.dist);
  CHECK(back.parent == r.parent);
  CHECK(back.source == 0);
  const json j = json::parse(bench::result_to_json(r, Algorithm::BellmanFord));
  CHECK(j["dist"][3] == "inf");
  CHECK(j["parent"][0] == -1);
  CHECK_THROWS_AS((void)bench::result_from_json("{"), Error);
  CHECK_THROWS_AS((void)bench::result_from_json(R"({"source":0,"dist":["nan"],"parent":[-1]})"),
                  Error);
}

TEST_CASE("cli gen / run / verify") {
  const std::string g = tmp("cli_graph.txt");
  const std::string res = tmp("cli_result.json");

  Cli c = invoke({"gen", "--family", "neg-dense", "--n", "200", "--m", "3000", "--neg-fraction",
               "0.4", "--seed", "3", "-o", g});
  REQUIRE(c.code == 0);
  CHECK(c.out == "n=200 m=3000 seed=3\n");
  const EdgeListDoc doc = read_text_file(g);
  CHECK(doc.n == 200);
  std::size_t neg = 0;
  for (const auto& e : doc.edges) neg += e.weight < 0;
  CHECK(static_cast<double>(neg) / 3000.0 == doctest::Approx(0.4).epsilon(0.1));

  c = invoke({"gen", "--family", "slf-killer"});
  CHECK(c.code == cli::kExitError);
  CHECK(c.err.find("SpecInvalid") != std::string::npos);
  CHECK(c.err.find("Usage") != std::string::npos);

  c = invoke({"run", g, "--algo", "jfr-pq", "--source", "0", "--check", "--result-out", res});
  REQUIRE(c.code == 0);
  json j = json::parse(c.out);
  CHECK(j["check"] == "PASS");
  CHECK(j["n"] == 200);

  c = invoke({"run", g, "--algo", "bf", "--repetitions", "5"});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["time_ns"].get<std::int64_t>() > 0);

  c = invoke({"run", g, "--algo", "dijkstra"});
  CHECK(c.code != 0);
  CHECK(c.err.find("NegativeWeightPresent") != std::string::npos);

  c = invoke({"run", g, "--algo", "astar"});
  CHECK(c.code != 0);
  CHECK(c.err.find("UnknownAlgorithm") != std::string::npos);

  c = invoke({"verify", g, "--result", res});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["all_ok"] == true);

  c = invoke({"verify", g, "--result", res, "--source", "5"});
  CHECK(c.code == cli::kExitCheckFailed);
  CHECK(json::parse(c.out)["distances_match"] == false);

  json tampered = json::parse(std::ifstream(res));
  for (auto& d : tampered["dist"]) {
    if (d.is_number() && d.get<double>() != 0.0) {
      d = d.get<double>() + 1.0;
      break;
    }
  }
  std::ofstream(res) << tampered.dump();
  c = invoke({"verify", g, "--result", res});
  CHECK(c.code == cli::kExitCheckFailed);
  CHECK_FALSE(json::parse(c.out)["first_mismatch"].is_null());

  c = invoke({"run", tmp("missing.txt")});
  CHECK(c.code == cli::kExitError);

  std::filesystem::remove(g);
  std::filesystem::remove(res);
}

TEST_CASE("cli compare and sweep") {
  const std::string g = tmp("cli_sk.txt");
  REQUIRE(invoke({"gen", "--family", "slf-killer", "--n", "2000", "--seed", "1", "-o", g}).code == 0);
  std::string header_line;
  std::getline(std::ifstream(g) >> std::ws, header_line);
  CHECK(header_line == "2000 21924");

  Cli c = invoke({"compare", g, "--base", "slf", "--jfr", "jfr-pq"});
  REQUIRE(c.code == 0);
  auto ls = lines(c.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "#schema=1 compare");
  auto header = split(ls[1]);
  auto row = split(ls[2]);
  REQUIRE(header.size() == row.size());
  const auto col = [&](const std::string& name) {
    return row[static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin())];
  };
  CHECK(std::stod(col("rho_ops")) >= 10.0);

  c = invoke({"compare", g, "--base", "slf", "--jfr", "slf", "--no-header"});
  REQUIRE(c.code == 0);
  row = split(lines(c.out)[0]);
  CHECK(col("rho_ops") == "1");
  CHECK(col("nwr") == "1");

  c = invoke({"sweep-edges", "--family", "neg-dense", "--n", "100", "--m", "1000", "--neg-fraction",
           "0.4", "--fractions", "0.05,0.1", "--seeds", "2"});
  REQUIRE(c.code == 0);
  CHECK(lines(c.out).size() == 2 + 4 + 1);

  c = invoke({"sweep-edges", g, "--fractions", "0.000001"});
  REQUIRE(c.code == 0);
  CHECK(split(lines(c.out)[2])[5] == "1");

  c = invoke({"sweep-edges", g});
  CHECK(c.code == cli::kExitError);
  c = invoke({"sweep-edges", g, "--fractions", "1.5"});
  CHECK(c.code == cli::kExitError);
  CHECK(c.err.find("SpecInvalid") != std::string::npos);
  std::filesystem::remove(g);
}

TEST_CASE("cli suite") {
  const std::string spec = tmp("suite.json");
  const std::string out = tmp("suite.csv");
  const std::string cmp = tmp("suite_cmp.csv");
  std::ofstream(spec) << kSmallSuite;
  Cli c = invoke({"suite", spec, "-o", out, "--comparisons", cmp, "--threads", "2"});
  CHECK(c.code == 0);
  CHECK(std::filesystem::exists(out));
  CHECK(std::filesystem::exists(cmp));
  c = invoke({"suite", tmp("absent.json")});
  CHECK(c.code == cli::kExitError);
  c = invoke({"--help"});
  CHECK(c.code == 0);
  c = invoke({});
  CHECK(c.code == cli::kExitError);
  for (const auto& p : {spec, out, cmp}) std::filesystem::remove(p);
}

#include <doctest.h>

#include <cmath>

#include "jfr/metrics.hpp"
#include "oracle.hpp"

using namespace jfr;

TEST_CASE("published SLF-killer row") {
  // baseline SPFA-SLF: 1064.71 ms, 44,693,930 ops; JFR: 13.56 ms, 1,007,091 ops
  const Comparison c = compare(44693930, 1064710000, 1007091, 13560000);
  CHECK(c.rho_ops == doctest::Approx(44.38).epsilon(1e-3));
  CHECK(c.rho_tpr == doctest::Approx(0.565).epsilon(1e-3));
  CHECK(c.nwr == doctest::Approx(1.0 / 44.38).epsilon(1e-3));
  CHECK(c.predicted_speedup);
  CHECK(c.observed_speedup);
  CHECK(1.0 - c.nwr == doctest::Approx(0.977).epsilon(1e-3));
}

TEST_CASE("identity comparison") {
  RunStats s;
  s.edge_inspections = 1234;
  s.wall_time_ns = 5678;
  const Comparison c = compare(s, s);
  CHECK(c.rho_ops == 1.0);
  CHECK(c.rho_tpr == 1.0);
  CHECK(c.nwr == 1.0);
  CHECK_FALSE(c.predicted_speedup);
  CHECK_FALSE(c.observed_speedup);
}

TEST_CASE("zero ops") {
  try {
    (void)compare(0, 10, 5, 10);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroOps);
  }
  CHECK_THROWS_AS((void)compare(5, 10, 0, 10), Error);
}

TEST_CASE("metric identities hold for arbitrary counts") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100000; ++t) {
    const std::uint64_t ob = 1 + rng() % 100000000000ULL;
    const std::uint64_t oj = 1 + rng() % 100000000000ULL;
    const auto tb = static_cast<std::int64_t>(rng() % 10000000000ULL);
    const auto tj = static_cast<std::int64_t>(rng() % 10000000000ULL);
    const Comparison c = compare(ob, tb, oj, tj);
    REQUIRE(std::abs(c.rho_ops * c.nwr - 1.0) <= 1e-12);
    REQUIRE(c.predicted_speedup == c.observed_speedup);
    REQUIRE(c.observed_speedup == (tj < tb));
  }
}

TEST_CASE("bound_check") {
  SUBCASE("edgeless graph") {
    const Graph g = Graph::from_edge_list({4, {}});
    const BoundReport b = bound_check(jfr_strict(g, 0, 2).stats, g, 2);
    CHECK(b.lhs == 0.0);
    CHECK(b.holds);
  }
  SUBCASE("chain of 10 unit edges, k=1") {
    EdgeListDoc doc{11, {}};
    for (VertexId v = 0; v < 10; ++v) doc.edges.push_back({v, v + 1, 1.0});
    const Graph g = Graph::from_edge_list(doc);
    const BoundReport b = bound_check(jfr_strict(g, 0, 1).stats, g, 1);
    // ten scans of a degree-one vertex; rhs = 10 + 9 improvements of degree-one vertices
    CHECK(b.lhs == 10.0);
    CHECK(b.rhs == 19.0);
    CHECK(b.holds);
  }
  SUBCASE("random graphs") {
    std::mt19937_64 rng(500);
    for (int t = 0; t < 500; ++t) {
      const Graph g = Graph::from_edge_list(oracle::potential_graph(rng, 100, 300 + rng() % 500));
      for (unsigned k : {1u, 2u, 4u}) {
        REQUIRE(bound_check(jfr_strict(g, 0, k).stats, g, k).holds);
      }
    }
  }
  SUBCASE("other solvers are rejected") {
    const Graph g = Graph::from_edge_list({2, {{0, 1, 1.0}}});
    try {
      (void)bound_check(spfa_slf(g, 0).stats, g, 2);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ModeMismatch);
    }
  }
}

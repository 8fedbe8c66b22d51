#include <doctest.h>

#include "jfr/algorithms.hpp"
#include "jfr/generators.hpp"
#include "oracle.hpp"

using namespace jfr;

namespace {

GenSpec spec_of(Family f, std::size_t n, std::size_t m, std::uint64_t seed) {
  GenSpec s;
  s.family = f;
  s.n = n;
  s.m = m;
  s.seed = seed;
  return s;
}

bool on_lattice(double w) { return w * 64.0 == std::floor(w * 64.0); }

}  // namespace

TEST_CASE("sparse random") {
  const Graph empty = generate(spec_of(Family::SparseRandom, 5, 0, 1));
  CHECK(empty.num_vertices() == 5);
  CHECK(empty.num_edges() == 0);

  const auto a = write_text(generate(spec_of(Family::SparseRandom, 100, 500, 7)).to_edge_list());
  const auto b = write_text(generate(spec_of(Family::SparseRandom, 100, 500, 7)).to_edge_list());
  CHECK(a == b);
  CHECK(a != write_text(generate(spec_of(Family::SparseRandom, 100, 500, 8)).to_edge_list()));

  const Graph big = generate(spec_of(Family::SparseRandom, 20000, 100000, 3));
  CHECK(big.num_edges() == 100000);
  CHECK_FALSE(big.has_negative_weight());
  for (double w : big.edge_weights()) {
    REQUIRE(on_lattice(w));
    REQUIRE(w >= 1.0);
    REQUIRE(w <= 100.0);
  }
}

TEST_CASE("neg-dense: mixed signs, never a negative cycle") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GenSpec s = spec_of(Family::NegDense, 20 + seed, 8 * (20 + seed), seed);
    s.neg_fraction = 0.4;
    const EdgeListDoc doc = generate(s).to_edge_list();
    // every vertex as a source
    for (VertexId src = 0; src < doc.n; ++src) {
      REQUIRE_FALSE(oracle::bellman_ford(doc, src).neg_cycle);
    }
  }
}

TEST_CASE("neg-dense: potentials, fraction, density") {
  GenSpec s = spec_of(Family::NegDense, 200, 3000, 9);
  s.neg_fraction = 0.4;
  const PotentialGraph pg = gen_neg_dense_with_potentials(s);
  CHECK(write_text(pg.graph.to_edge_list()) == write_text(gen_neg_dense(s).to_edge_list()));
  std::size_t neg = 0;
  for (const auto& e : pg.graph.to_edge_list().edges) {
    CHECK(e.weight - pg.potentials[e.tail] + pg.potentials[e.head] >= 0.0);
    CHECK(on_lattice(e.weight));
    neg += e.weight < 0 ? 1 : 0;
  }
  CHECK(pg.graph.num_edges() == 3000);
  CHECK(static_cast<double>(neg) / 3000.0 == doctest::Approx(0.4).epsilon(0.1));

  s.neg_fraction = 0.0;
  CHECK_FALSE(generate(s).has_negative_weight());

  GenSpec dense = spec_of(Family::NegDense, 2000, 3000000, 1);
  dense.neg_fraction = 0.4;
  CHECK(generate(dense).num_edges() == 3000000);
}

TEST_CASE("windmill") {
  const Graph tiny = gen_windmill(1, 2, 1);
  CHECK(tiny.num_vertices() == 2);
  CHECK(tiny.num_edges() == 2);
  CHECK(tiny.out_edges(0).size() == 1);
  CHECK(tiny.out_edges(1).size() == 1);

  const Graph w = gen_windmill(3, 4, 1);
  CHECK(w.num_vertices() == 10);
  CHECK(w.num_edges() == 3 * 4 * 3);
  CHECK(w.degree(0) == 3 * 3);

  GenSpec s;
  s.family = Family::Windmill;
  s.blades = 20;
  s.blade_size = 15;
  s.seed = 4;
  CHECK(generate(s).num_vertices() == 281);

  CHECK_THROWS_AS(gen_windmill(0, 4, 1), Error);
  CHECK_THROWS_AS(gen_windmill(2, 1, 1), Error);
}

TEST_CASE("slf-killer") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const EdgeListDoc doc = gen_slf_killer(8, seed).to_edge_list();
    CHECK(doc.n == 8);
    const auto ref = oracle::bellman_ford(doc, 0);
    CHECK_FALSE(ref.neg_cycle);
    CHECK(ref.dist == oracle::simple_path_minimum(doc, 0));
    for (double d : ref.dist) CHECK(d < oracle::kInf);
    CHECK(bellman_ford(Graph::from_edge_list(doc), 0).dist == ref.dist);
  }
  CHECK(write_text(gen_slf_killer(300, 5).to_edge_list()) ==
        write_text(gen_slf_killer(300, 5).to_edge_list()));
  CHECK_FALSE(gen_slf_killer(300, 5).has_negative_weight());
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(generate(spec_of(Family::SparseRandom, 0, 0, 1)), Error);
  GenSpec s = spec_of(Family::SparseRandom, 10, 10, 1);
  s.weight_lo = 5;
  s.weight_hi = 1;
  CHECK_THROWS_AS(generate(s), Error);
  s = spec_of(Family::NegDense, 10, 10, 1);
  s.neg_fraction = 1.5;
  CHECK_THROWS_AS(generate(s), Error);
  CHECK_THROWS_AS(parse_family("hypercube"), Error);
  CHECK(parse_family("slf-killer") == Family::SlfKiller);
  CHECK(parse_family(to_string(Family::NegDense)) == Family::NegDense);
}

TEST_CASE("increment size") {
  CHECK(increment_size(500000.0 / 5182231.0, 5182231) == 500000);
  CHECK(5182231 + increment_size(500000.0 / 5182231.0, 5182231) == 5682231);
  CHECK(increment_size(0.1, 30000) == 3000);
  CHECK(increment_size(1e-6, 10) == 1);
  CHECK(increment_size(1.0, 7) == 7);
}

TEST_CASE("add_edges") {
  const Graph one = Graph::from_edge_list({3, {{0, 1, 1.0}}});
  EdgeIncrement inc;
  inc.fraction = 1.0;
  inc.seed = 2;
  CHECK(add_edges(one, inc).num_edges() == 2);
  inc.fraction = 1e-6;
  CHECK(add_edges(one, inc).num_edges() == 2);

  inc.fraction = 0.0;
  CHECK_THROWS_AS(add_edges(one, inc), Error);
  inc.fraction = 1.5;
  CHECK_THROWS_AS(add_edges(one, inc), Error);
  inc.fraction = 0.5;
  CHECK_THROWS_AS(add_edges(Graph::from_edge_list({3, {}}), inc), Error);

  inc.neg_safe = true;
  try {
    (void)add_edges(one, inc);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PotentialUnavailable);
  }

  GenSpec s = spec_of(Family::NegDense, 40, 300, 3);
  s.neg_fraction = 0.4;
  const PotentialGraph pg = gen_neg_dense_with_potentials(s);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    inc.fraction = 0.15;
    inc.seed = seed;
    const Graph aug = add_edges(pg.graph, inc, &pg.potentials);
    CHECK(aug.num_edges() == 300 + 45);
    CHECK_FALSE(oracle::has_any_negative_cycle(aug.to_edge_list()));
    // original out-edges come first for every tail
    for (VertexId u = 0; u < 40; ++u) {
      const auto before = pg.graph.out_edges(u);
      const auto after = aug.out_edges(u);
      REQUIRE(after.size() >= before.size());
      CHECK(std::equal(before.begin(), before.end(), after.begin()));
    }
  }
  CHECK(write_text(add_edges(pg.graph, inc, &pg.potentials).to_edge_list()) ==
        write_text(add_edges(pg.graph, inc, &pg.potentials).to_edge_list()));
}

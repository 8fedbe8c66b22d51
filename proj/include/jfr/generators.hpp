#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "jfr/graph.hpp"

namespace jfr {

enum class Family { SparseRandom, NegDense, Windmill, SlfKiller };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);  // throws SpecInvalid

/// Generator parameters. Windmill instances read `blades`/`blade_size`
/// instead of `n`/`m`; the SLF-killer reads only `n` and `seed`.
struct GenSpec {
  Family family = Family::SparseRandom;
  std::size_t n = 0;
  std::size_t m = 0;
  double weight_lo = 1.0;
  double weight_hi = 100.0;
  double neg_fraction = 0.0;
  std::size_t blades = 0;
  std::size_t blade_size = 0;
  std::uint64_t seed = 0;
};

// All generated weights are multiples of 1/64. Such values are exact in
// binary floating point and print with at most six decimals, so path sums
// are exact regardless of summation order.
inline constexpr double kWeightQuantum = 1.0 / 64.0;

/// Graph plus the hidden vertex potentials used to make negative weights safe.
struct PotentialGraph {
  Graph graph;
  std::vector<double> potentials;
};

Graph gen_sparse_random(const GenSpec& spec);
Graph gen_neg_dense(const GenSpec& spec);
PotentialGraph gen_neg_dense_with_potentials(const GenSpec& spec);
Graph gen_windmill(std::size_t blades, std::size_t blade_size, std::uint64_t seed,
                   double weight_lo = 1.0, double weight_hi = 100.0);
Graph gen_slf_killer(std::size_t n, std::uint64_t seed);

/// Dispatches on spec.family.
Graph generate(const GenSpec& spec);

struct EdgeIncrement {
  double fraction = 0.1;
  double weight_lo = 1.0;
  double weight_hi = 100.0;
  std::uint64_t seed = 0;
  /// Weights become w0 + p(u) - p(v) so no negative cycle can appear.
  bool neg_safe = false;
};

/// Number of edges add_edges appends: ceil(fraction * m).
std::size_t increment_size(double fraction, std::size_t m);

/// Returns g with ceil(fraction * m) extra random edges appended after the
/// original ones. `potentials` is required when inc.neg_safe is set.
Graph add_edges(const Graph& g, const EdgeIncrement& inc,
                const std::vector<double>* potentials = nullptr);

}  // namespace jfr

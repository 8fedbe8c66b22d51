#include "jfr/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

namespace jfr {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::SparseRandom: return "sparse-random";
    case Family::NegDense: return "neg-dense";
    case Family::Windmill: return "windmill";
    case Family::SlfKiller: return "slf-killer";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "sparse-random" || name == "sparse") return Family::SparseRandom;
  if (name == "neg-dense") return Family::NegDense;
  if (name == "windmill") return Family::Windmill;
  if (name == "slf-killer") return Family::SlfKiller;
  throw Error(ErrorCode::SpecInvalid, "unknown family '" + std::string(name) + "'");
}

namespace {

using Rng = std::mt19937_64;
__extension__ typedef unsigned __int128 Wide;

// Fixed mappings from raw 64-bit draws; std distributions are avoided because
// their algorithms differ between standard libraries.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<Wide>(rng()) * bound) >> 64);
}

double unit_interval(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform over the multiples of kWeightQuantum inside [lo, hi].
class QuantizedUniform {
 public:
  QuantizedUniform(double lo, double hi)
      : lo_(static_cast<std::int64_t>(std::ceil(lo / kWeightQuantum))),
        hi_(static_cast<std::int64_t>(std::floor(hi / kWeightQuantum))) {
    if (!(lo <= hi) || lo_ > hi_) {
      throw Error(ErrorCode::SpecInvalid, "weight range [" + format_weight(lo) + ", " +
                                              format_weight(hi) +
                                              "] contains no multiple of 1/64");
    }
  }

  double operator()(Rng& rng) const {
    const auto span = static_cast<std::uint64_t>(hi_ - lo_) + 1;
    return static_cast<double>(lo_ + static_cast<std::int64_t>(uniform_index(rng, span))) *
           kWeightQuantum;
  }

 private:
  std::int64_t lo_;
  std::int64_t hi_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::SpecInvalid, what);
}

void require_vertex_count(std::size_t n) {
  require(n >= 1, "n must be >= 1");
  require(n <= static_cast<std::size_t>(kNoVertex), "n exceeds 32-bit vertex ids");
}

}  // namespace

Graph gen_sparse_random(const GenSpec& spec) {
  require(spec.family == Family::SparseRandom, "spec family is not sparse-random");
  require_vertex_count(spec.n);
  require(spec.weight_lo >= 0, "sparse-random requires weight_lo >= 0");
  const QuantizedUniform weight(spec.weight_lo, spec.weight_hi);

  Rng rng(spec.seed);
  EdgeListDoc doc;
  doc.n = spec.n;
  doc.edges.reserve(spec.m);
  for (std::size_t i = 0; i < spec.m; ++i) {
    const auto u = static_cast<VertexId>(uniform_index(rng, spec.n));
    const auto v = static_cast<VertexId>(uniform_index(rng, spec.n));
    doc.edges.push_back({u, v, weight(rng)});
  }
  return Graph::from_edge_list(doc);
}

PotentialGraph gen_neg_dense_with_potentials(const GenSpec& spec) {
  require(spec.family == Family::NegDense, "spec family is not neg-dense");
  require_vertex_count(spec.n);
  require(spec.weight_lo >= 0, "neg-dense base weights must be >= 0");
  require(spec.neg_fraction >= 0 && spec.neg_fraction <= 1, "neg_fraction must lie in [0,1]");
  const QuantizedUniform base(spec.weight_lo, spec.weight_hi);

  Rng rng(spec.seed);
  PotentialGraph out;
  out.potentials.assign(spec.n, 0.0);
  if (spec.neg_fraction > 0) {
    // Potential spread well above the base range so most sampled pairs can
    // carry a negative edge.
    const QuantizedUniform potential(0.0, 4.0 * std::max(spec.weight_hi, 1.0));
    for (double& p : out.potentials) p = potential(rng);
  }
  const auto& p = out.potentials;

  EdgeListDoc doc;
  doc.n = spec.n;
  doc.edges.reserve(spec.m);
  constexpr int kMaxNegativeTries = 32;
  for (std::size_t i = 0; i < spec.m; ++i) {
    const double w0 = base(rng);
    const bool want_negative = spec.neg_fraction > 0 && unit_interval(rng) < spec.neg_fraction;
    auto u = static_cast<VertexId>(uniform_index(rng, spec.n));
    auto v = static_cast<VertexId>(uniform_index(rng, spec.n));
    if (want_negative) {
      // Negative iff p(v) - p(u) > w0: orient uphill and resample flat pairs.
      for (int t = 0; t < kMaxNegativeTries; ++t) {
        if (p[u] > p[v]) std::swap(u, v);
        if (p[v] - p[u] > w0) break;
        u = static_cast<VertexId>(uniform_index(rng, spec.n));
        v = static_cast<VertexId>(uniform_index(rng, spec.n));
      }
    } else if (p[u] < p[v]) {
      std::swap(u, v);
    }
    doc.edges.push_back({u, v, w0 + p[u] - p[v]});
  }
  out.graph = Graph::from_edge_list(doc);
  return out;
}

Graph gen_neg_dense(const GenSpec& spec) { return gen_neg_dense_with_potentials(spec).graph; }

Graph gen_windmill(std::size_t blades, std::size_t blade_size, std::uint64_t seed,
                   double weight_lo, double weight_hi) {
  require(blades >= 1, "windmill needs blades >= 1");
  require(blade_size >= 2, "windmill needs blade_size >= 2");
  require(weight_lo > 0, "windmill weights must be positive");
  const QuantizedUniform weight(weight_lo, weight_hi);
  const std::size_t n = blades * (blade_size - 1) + 1;
  require_vertex_count(n);

  Rng rng(seed);
  EdgeListDoc doc;
  doc.n = n;
  doc.edges.reserve(blades * blade_size * (blade_size - 1));
  std::vector<VertexId> members(blade_size);
  for (std::size_t b = 0; b < blades; ++b) {
    members[0] = 0;  // hub
    for (std::size_t i = 1; i < blade_size; ++i) {
      members[i] = static_cast<VertexId>(1 + b * (blade_size - 1) + (i - 1));
    }
    for (VertexId x : members) {
      for (VertexId y : members) {
        if (x != y) doc.edges.push_back({x, y, weight(rng)});
      }
    }
  }
  return Graph::from_edge_list(doc);
}

Graph gen_slf_killer(std::size_t n, std::uint64_t seed) {
  require(n >= 8, "slf-killer needs n >= 8");
  require_vertex_count(n);

  // Layout: 0 = source, 1 = decoy, 2.. = chain v_1..v_L.
  //
  // The source lists the decoy first (label 0) and then the chain in reverse
  // with labels decreasing towards v_1. Every later push compares against
  // the decoy at the deque front and goes to the back, so SLF scans the chain
  // from its far end. Each label step exceeds the chain weight, making the
  // route through v_1 optimal everywhere; each scan of v_i then improves
  // v_{i+1} again and the corrections sweep the chain once per vertex.
  // Shortcuts v_i -> v_{i+j} cost slightly more than the chain segment they
  // span, adding near-miss improvements that get undone later.
  const std::size_t chain_len = n - 2;
  const auto chain = [](std::size_t i) { return static_cast<VertexId>(i + 1); };  // i in 1..L
  const std::size_t max_jump = std::max<std::size_t>(2, std::bit_width(n) - 1);
  constexpr double kBaseLabel = 1000.0;

  Rng rng(seed);
  const QuantizedUniform chain_weight(1.0, 2.0);
  const QuantizedUniform label_step(2.25, 3.0);
  const QuantizedUniform slack(0.5, 1.0);

  std::vector<double> c(chain_len + 1, 0.0);  // c[i]: weight of v_i -> v_{i+1}
  for (std::size_t i = 1; i < chain_len; ++i) c[i] = chain_weight(rng);
  std::vector<double> label(chain_len + 1, 0.0);
  double acc = kBaseLabel;
  for (std::size_t i = 1; i <= chain_len; ++i) {
    acc += label_step(rng);
    label[i] = acc;
  }

  EdgeListDoc doc;
  doc.n = n;
  doc.edges.push_back({0, 1, 0.0});
  for (std::size_t i = chain_len; i >= 1; --i) doc.edges.push_back({0, chain(i), label[i]});
  for (std::size_t i = 1; i < chain_len; ++i) {
    doc.edges.push_back({chain(i), chain(i + 1), c[i]});
    double span = c[i];
    for (std::size_t j = 2; j <= max_jump && i + j <= chain_len; ++j) {
      span += c[i + j - 1];
      doc.edges.push_back({chain(i), chain(i + j), span + slack(rng)});
    }
  }
  return Graph::from_edge_list(doc);
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::SparseRandom: return gen_sparse_random(spec);
    case Family::NegDense: return gen_neg_dense(spec);
    case Family::Windmill:
      return gen_windmill(spec.blades, spec.blade_size, spec.seed, spec.weight_lo, spec.weight_hi);
    case Family::SlfKiller: return gen_slf_killer(spec.n, spec.seed);
  }
  throw Error(ErrorCode::SpecInvalid, "unknown family");
}

std::size_t increment_size(double fraction, std::size_t m) {
  const double x = fraction * static_cast<double>(m);
  const double nearest = std::round(x);
  // Absorb representation error so e.g. 0.1 * 30000 stays 3000.
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, x)) return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::ceil(x));
}

Graph add_edges(const Graph& g, const EdgeIncrement& inc, const std::vector<double>* potentials) {
  require(inc.fraction > 0 && inc.fraction <= 1, "fraction must lie in (0,1]");
  require(g.num_edges() >= 1, "cannot scale an increment on an edgeless graph");
  require(inc.weight_lo >= 0, "increment base weights must be >= 0");
  const QuantizedUniform base(inc.weight_lo, inc.weight_hi);
  if (inc.neg_safe) {
    if (potentials == nullptr) {
      throw Error(ErrorCode::PotentialUnavailable, "graph was built without vertex potentials");
    }
    require(potentials->size() == g.num_vertices(), "potential vector size differs from n");
  }

  const std::size_t extra = increment_size(inc.fraction, g.num_edges());
  EdgeListDoc doc = g.to_edge_list();
  doc.edges.reserve(doc.edges.size() + extra);
  Rng rng(inc.seed);
  const std::size_t n = g.num_vertices();
  for (std::size_t i = 0; i < extra; ++i) {
    const auto u = static_cast<VertexId>(uniform_index(rng, n));
    const auto v = static_cast<VertexId>(uniform_index(rng, n));
    double w = base(rng);
    if (inc.neg_safe) w += (*potentials)[u] - (*potentials)[v];
    doc.edges.push_back({u, v, w});
  }
  return Graph::from_edge_list(doc);
}

}  // namespace jfr

#include "jfr/metrics.hpp"

namespace jfr {

namespace {
__extension__ typedef unsigned __int128 Wide;
}  // namespace

Comparison compare(std::uint64_t ops_base, std::int64_t time_base_ns, std::uint64_t ops_jfr,
                   std::int64_t time_jfr_ns) {
  if (ops_base == 0 || ops_jfr == 0) {
    throw Error(ErrorCode::ZeroOps, "operation counts must be positive");
  }
  Comparison c;
  c.ops_base = ops_base;
  c.ops_jfr = ops_jfr;
  c.time_base_ns = time_base_ns;
  c.time_jfr_ns = time_jfr_ns;

  const auto ob = static_cast<double>(ops_base);
  const auto oj = static_cast<double>(ops_jfr);
  const auto tb = static_cast<double>(time_base_ns);
  const auto tj = static_cast<double>(time_jfr_ns);
  c.rho_ops = ob / oj;
  c.nwr = oj / ob;
  c.rho_tpr = tb > 0 ? (tj / oj) / (tb / ob) : kInfinity;

  // Exact rational comparison of rho_ops against rho_tpr:
  //   ob/oj > (tj*ob)/(tb*oj)  <=>  ob*tb*oj > tj*ob*oj.
  const Wide lhs = Wide(ops_base) * Wide(static_cast<std::uint64_t>(time_base_ns)) * Wide(ops_jfr);
  const Wide rhs = Wide(static_cast<std::uint64_t>(time_jfr_ns)) * Wide(ops_base) * Wide(ops_jfr);
  c.predicted_speedup = lhs > rhs;
  c.observed_speedup = time_jfr_ns < time_base_ns;
  return c;
}

Comparison compare(const RunStats& base, const RunStats& jfr) {
  return compare(base.edge_inspections, base.wall_time_ns, jfr.edge_inspections, jfr.wall_time_ns);
}

BoundReport bound_check(const RunStats& stats, const Graph& g, unsigned k) {
  if (stats.algorithm != Algorithm::JfrStrict) {
    throw Error(ErrorCode::ModeMismatch, "bound_check needs strict-mode statistics");
  }
  if (k < 1) throw Error(ErrorCode::SpecInvalid, "k must be >= 1");
  const std::size_t n = g.num_vertices();
  if (stats.activations.size() != n || stats.improvements.size() != n) {
    throw Error(ErrorCode::ModeMismatch, "statistics do not match the graph size");
  }
  double activation_work = 0;
  double degree_sum = 0;
  double improvement_work = 0;
  for (VertexId v = 0; v < n; ++v) {
    const auto deg = static_cast<double>(g.degree(v));
    activation_work += stats.activations[v] * deg;
    degree_sum += deg;
    improvement_work += stats.improvements[v] * deg;
  }
  BoundReport r;
  r.lhs = activation_work;
  r.rhs = degree_sum + improvement_work / static_cast<double>(k);
  r.holds = r.lhs <= r.rhs + static_cast<double>(n);
  return r;
}

}  // namespace jfr

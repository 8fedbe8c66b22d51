#pragma once

#include <cstdint>

#include "jfr/algorithms.hpp"

namespace jfr {

/// Baseline-versus-JFR efficiency indicators.
///   rho_ops = ops_base / ops_jfr
///   rho_tpr = (time_jfr / ops_jfr) / (time_base / ops_base)
///   nwr     = ops_jfr / ops_base
/// JFR is faster exactly when rho_ops > rho_tpr.
struct Comparison {
  std::uint64_t ops_base = 0;
  std::uint64_t ops_jfr = 0;
  std::int64_t time_base_ns = 0;
  std::int64_t time_jfr_ns = 0;
  double rho_ops = 0;
  double rho_tpr = 0;
  double nwr = 0;
  bool predicted_speedup = false;
  bool observed_speedup = false;
};

/// Uses edge_inspections as the operation count and wall_time_ns as time.
Comparison compare(const RunStats& base, const RunStats& jfr);
Comparison compare(std::uint64_t ops_base, std::int64_t time_base_ns, std::uint64_t ops_jfr,
                   std::int64_t time_jfr_ns);

struct BoundReport {
  double lhs = 0;  // sum over v of activations * deg
  double rhs = 0;  // sum of deg + (1/k) * sum of improvements * deg
  bool holds = false;
};

/// Amortised edge-inspection bound for a strict-mode run. The comparison
/// allows an additive n for the O(n + .) slack. Throws ModeMismatch for
/// stats from any other solver.
BoundReport bound_check(const RunStats& stats, const Graph& g, unsigned k);

}  // namespace jfr

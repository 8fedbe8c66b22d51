#pragma once

#include <optional>

#include "jfr/algorithms.hpp"

namespace jfr {

struct Mismatch {
  VertexId vertex = 0;
  double expected = 0;
  double actual = 0;
};

struct VerifyReport {
  bool distances_match = true;
  bool triangle_ok = true;
  bool parent_ok = true;
  bool neg_cycle_agree = true;
  std::optional<Mismatch> first_mismatch;

  [[nodiscard]] bool all_ok() const {
    return distances_match && triangle_ok && parent_ok && neg_cycle_agree;
  }
};

/// Compares a candidate against a fresh Bellman-Ford run from s. Distances
/// must agree exactly, +inf pattern included. When both sides report a
/// negative cycle there is nothing to compare and the distances count as
/// matching; the optimality fields are filled only for cycle-free candidates.
VerifyReport oracle_compare(const Graph& g, VertexId s, const SsspResult& candidate);

/// Same, against a Bellman-Ford result computed earlier for (g, s).
VerifyReport oracle_compare(const Graph& g, VertexId s, const SsspResult& candidate,
                            const SsspResult& truth);

/// Checks the fixed-point conditions without an oracle: dist[s] = 0, every
/// edge out of a reachable vertex satisfies d[u] + w >= d[v], every reachable
/// non-source vertex has a tight parent edge, and parent chains reach s.
/// Throws NegCycleResult for results that report a negative cycle.
VerifyReport check_optimality_conditions(const Graph& g, VertexId s, const SsspResult& result);

}  // namespace jfr

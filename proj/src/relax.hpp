#pragma once

#include <chrono>

#include "jfr/algorithms.hpp"

namespace jfr::detail {

// One edge inspection. Returns true on a strict improvement of d[v].
inline bool relax(LabelState& st, VertexId u, VertexId v, double w) {
  ++st.stats.edge_inspections;
  const double candidate = st.dist[u] + w;
  if (candidate < st.dist[v]) {
    st.dist[v] = candidate;
    st.parent[v] = u;
    st.dirty[v] = 1;
    ++st.stats.successful_relaxations;
    ++st.stats.improvements[v];
    return true;
  }
  return false;
}

void check_source(const Graph& g, VertexId s);

SsspResult finish(LabelState&& st, VertexId s, bool neg_cycle, VertexId hint,
                  std::chrono::steady_clock::time_point started);

// Amortised negative-cycle guard for label-correcting orders without a round
// structure: after every n improvements the parent graph is scanned for a
// cycle, which can only exist when a negative cycle is reachable.
class ParentCycleGuard {
 public:
  explicit ParentCycleGuard(std::size_t n) : period_(n == 0 ? 1 : n) {}

  VertexId on_improvement(const LabelState& st) {
    if (++since_scan_ < period_) return kNoVertex;
    since_scan_ = 0;
    return find_parent_cycle(st.parent);
  }

 private:
  std::size_t period_;
  std::size_t since_scan_ = 0;
};

}  // namespace jfr::detail

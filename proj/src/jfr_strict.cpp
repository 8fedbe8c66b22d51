#include <cmath>

#include "relax.hpp"

namespace jfr {

namespace {

// A vertex may enter the frontier for the j-th time only once it has been
// improved more than (j-1)*k times; until then its pending out-edges are
// handed to the next propagation pass instead. This keeps
// s(v) <= ceil(D_v / k) for every non-source vertex.
bool may_activate(const RunStats& stats, VertexId v, unsigned k) {
  const std::uint64_t budget = (static_cast<std::uint64_t>(stats.improvements[v]) + k - 1) / k;
  return stats.activations[v] < budget;
}

}  // namespace

SsspResult jfr_strict(const Graph& g, VertexId s, unsigned k, const LmhObserver* observer) {
  detail::check_source(g, s);
  if (k < 1) throw Error(ErrorCode::SpecInvalid, "k must be >= 1");
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = g.num_vertices();
  LabelState st(n, s, Algorithm::JfrStrict);
  st.stats.depth_k = k;
  LmhScratch scratch(n);

  std::vector<VertexId> frontier{s};
  std::vector<VertexId> pending;  // dirty vertices held back by the activation budget
  st.stats.activations[s] = 1;

  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t epoch = 0;
  std::vector<VertexId> seeds;
  std::vector<VertexId> candidates;

  while (!frontier.empty() || !pending.empty()) {
    const std::uint64_t iteration = ++st.stats.outer_iterations;
    const std::uint64_t relaxations_before = st.stats.successful_relaxations;
    VertexId last_improved = kNoVertex;
    ++epoch;

    // Frontier relaxation: every out-edge of every active vertex.
    seeds.clear();
    for (VertexId u : frontier) {
      st.dirty[u] = 0;
      const auto hs = g.heads(u);
      const auto ws = g.weights(u);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        const VertexId v = hs[i];
        if (!detail::relax(st, u, v, ws[i])) continue;
        last_improved = v;
        if (seen[v] != epoch) {
          seen[v] = epoch;
          seeds.push_back(v);
        }
      }
    }

    // Multi-hop propagation carries the wave k-1 further hops, so each
    // iteration settles all paths of at most k edges out of the frontier.
    candidates.clear();
    if (k >= 2) {
      for (VertexId v : pending) {
        if (seen[v] != epoch) {
          seen[v] = epoch;
          seeds.push_back(v);
        }
      }
      if (!seeds.empty()) {
        LmhOutcome out = lmh_propagate(g, seeds, k - 1, st, scratch, observer);
        if (!out.improved.empty()) last_improved = out.improved.back();
        candidates = std::move(out.unsettled);
      }
    } else {
      candidates = seeds;
    }

    // After n-1 iterations every simple path is settled; any later strict
    // improvement proves a reachable negative cycle.
    if (iteration >= n && st.stats.successful_relaxations > relaxations_before) {
      return detail::finish(std::move(st), s, true, last_improved, started);
    }

    frontier.clear();
    pending.clear();
    for (VertexId v : candidates) {
      if (may_activate(st.stats, v, k)) {
        ++st.stats.activations[v];
        frontier.push_back(v);
      } else {
        pending.push_back(v);
      }
    }
  }
  return detail::finish(std::move(st), s, false, kNoVertex, started);
}

}  // namespace jfr

#include <queue>

#include "relax.hpp"

namespace jfr {

std::size_t filter_stable_vertices(Frontier& frontier, const LabelState& state,
                                   const StabilityAux& aux) {
  std::vector<VertexId> stable;
  for (VertexId v : frontier.items()) {
    const bool propagated = !state.dirty[v];
    const bool quiet = aux.selections - aux.last_improved_at[v] >= aux.stability_window;
    const bool key_current = aux.queued_key[v] == state.dist[v];
    if (propagated && quiet && key_current) stable.push_back(v);
  }
  for (VertexId v : stable) frontier.erase(v);
  return stable.size();
}

SsspResult jfr_pq(const Graph& g, VertexId s, const JfrConfig& cfg, const LmhObserver* observer) {
  detail::check_source(g, s);
  validate(cfg);
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = g.num_vertices();
  LabelState st(n, s, Algorithm::JfrPq);
  st.stats.depth_k = cfg.k;
  LmhScratch scratch(n);
  detail::ParentCycleGuard guard(n);

  Frontier frontier(n);
  StabilityAux aux(n);
  aux.stability_window = cfg.stability_window;
  std::vector<std::uint32_t> improvements_at_last_pop(n, 0);

  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  auto enqueue = [&](VertexId v) {
    frontier.insert(v);
    queue.emplace(st.dist[v], v);
    aux.queued_key[v] = st.dist[v];
    ++st.stats.queue_pushes;
  };
  enqueue(s);

  const double filter_threshold = cfg.filter_alpha * static_cast<double>(n);
  std::uint64_t pops = 0;
  VertexId cycle_at = kNoVertex;

  // Bookkeeping after v improved; returns false once a negative cycle is certain.
  auto on_improved = [&](VertexId v) {
    aux.last_improved_at[v] = aux.selections;
    if (v == s) {
      cycle_at = v;
      return false;
    }
    if (const VertexId c = guard.on_improvement(st); c != kNoVertex) {
      cycle_at = c;
      return false;
    }
    return true;
  };

  while (!frontier.empty() && !queue.empty()) {
    const auto [key, u] = queue.top();
    queue.pop();
    ++pops;

    if (!frontier.contains(u) || key != st.dist[u]) {
      ++st.stats.stale_pops;
    } else if (!st.dirty[u]) {
      // Already propagated by an earlier multi-hop pass.
      frontier.erase(u);
      ++st.stats.stale_pops;
    } else {
      frontier.erase(u);
      ++aux.selections;
      ++st.stats.activations[u];
      ++st.stats.outer_iterations;

      const bool advancing = st.stats.improvements[u] > improvements_at_last_pop[u];
      improvements_at_last_pop[u] = st.stats.improvements[u];

      if (advancing) {
        const VertexId seed[] = {u};
        const LmhOutcome out = lmh_propagate(g, seed, cfg.k, st, scratch, observer);
        for (VertexId v : out.improved) {
          if (!on_improved(v)) break;
        }
        if (cycle_at != kNoVertex) break;
        for (VertexId v : out.improved) {
          if (st.dirty[v]) {
            enqueue(v);
          } else {
            frontier.erase(v);
          }
        }
      } else {
        st.dirty[u] = 0;
        const auto hs = g.heads(u);
        const auto ws = g.weights(u);
        for (std::size_t i = 0; i < hs.size(); ++i) {
          const VertexId v = hs[i];
          if (!detail::relax(st, u, v, ws[i])) continue;
          if (!on_improved(v)) break;
          enqueue(v);
        }
        if (cycle_at != kNoVertex) break;
      }
    }

    if (pops % cfg.filter_period == 0 && static_cast<double>(frontier.size()) > filter_threshold) {
      filter_stable_vertices(frontier, st, aux);
    }
  }

  const bool neg_cycle = cycle_at != kNoVertex;
  return detail::finish(std::move(st), s, neg_cycle, cycle_at, started);
}

}  // namespace jfr

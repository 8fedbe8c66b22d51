#include <deque>
#include <queue>

#include "relax.hpp"

namespace jfr {

using Clock = std::chrono::steady_clock;

SsspResult bellman_ford(const Graph& g, VertexId s) {
  detail::check_source(g, s);
  const auto started = Clock::now();
  const std::size_t n = g.num_vertices();
  LabelState st(n, s, Algorithm::BellmanFord);

  VertexId last_improved = kNoVertex;
  bool neg_cycle = false;
  // Passes 1..n-1 settle every simple path; an improving n-th pass proves a
  // reachable negative cycle.
  for (std::size_t pass = 1; pass <= n; ++pass) {
    st.stats.outer_iterations = pass;
    bool improved = false;
    for (VertexId u = 0; u < n; ++u) {
      ++st.stats.activations[u];
      const auto hs = g.heads(u);
      const auto ws = g.weights(u);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        if (detail::relax(st, u, hs[i], ws[i])) {
          improved = true;
          last_improved = hs[i];
        }
      }
    }
    if (!improved) break;
    if (pass == n) neg_cycle = true;
  }
  return detail::finish(std::move(st), s, neg_cycle, last_improved, started);
}

SsspResult spfa_fifo(const Graph& g, VertexId s) {
  detail::check_source(g, s);
  const auto started = Clock::now();
  const std::size_t n = g.num_vertices();
  LabelState st(n, s, Algorithm::SpfaFifo);

  std::deque<VertexId> queue{s};
  std::vector<char> queued(n, 0);
  std::vector<std::uint32_t> pushes(n, 0);
  queued[s] = 1;
  pushes[s] = 1;
  st.stats.queue_pushes = 1;

  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    queued[u] = 0;
    ++st.stats.activations[u];
    const auto hs = g.heads(u);
    const auto ws = g.weights(u);
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const VertexId v = hs[i];
      if (!detail::relax(st, u, v, ws[i])) continue;
      // FIFO order pushes a vertex at most once per round, and at most
      // n-1 rounds carry improvements without a negative cycle.
      if (v == s) return detail::finish(std::move(st), s, true, v, started);
      if (!queued[v]) {
        queued[v] = 1;
        queue.push_back(v);
        ++st.stats.queue_pushes;
        if (++pushes[v] >= n) return detail::finish(std::move(st), s, true, v, started);
      }
    }
  }
  return detail::finish(std::move(st), s, false, kNoVertex, started);
}

SsspResult spfa_slf(const Graph& g, VertexId s) {
  detail::check_source(g, s);
  const auto started = Clock::now();
  const std::size_t n = g.num_vertices();
  LabelState st(n, s, Algorithm::SpfaSlf);
  detail::ParentCycleGuard guard(n);

  std::deque<VertexId> queue{s};
  std::vector<char> queued(n, 0);
  queued[s] = 1;
  st.stats.queue_pushes = 1;

  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    queued[u] = 0;
    ++st.stats.activations[u];
    const auto hs = g.heads(u);
    const auto ws = g.weights(u);
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const VertexId v = hs[i];
      if (!detail::relax(st, u, v, ws[i])) continue;
      if (v == s) return detail::finish(std::move(st), s, true, v, started);
      if (const VertexId c = guard.on_improvement(st); c != kNoVertex) {
        return detail::finish(std::move(st), s, true, c, started);
      }
      if (queued[v]) continue;
      queued[v] = 1;
      ++st.stats.queue_pushes;
      // Smallest label first: beat the current front or wait at the back.
      if (!queue.empty() && st.dist[v] < st.dist[queue.front()]) {
        queue.push_front(v);
      } else {
        queue.push_back(v);
      }
    }
  }
  return detail::finish(std::move(st), s, false, kNoVertex, started);
}

SsspResult dijkstra_oracle(const Graph& g, VertexId s) {
  detail::check_source(g, s);
  if (g.has_negative_weight()) {
    throw Error(ErrorCode::NegativeWeightPresent, "Dijkstra requires non-negative weights");
  }
  const auto started = Clock::now();
  const std::size_t n = g.num_vertices();
  LabelState st(n, s, Algorithm::Dijkstra);

  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.emplace(0.0, s);
  st.stats.queue_pushes = 1;
  std::vector<char> settled(n, 0);

  while (!heap.empty()) {
    const auto [key, u] = heap.top();
    heap.pop();
    if (settled[u] || key != st.dist[u]) {
      ++st.stats.stale_pops;
      continue;
    }
    settled[u] = 1;
    ++st.stats.activations[u];
    const auto hs = g.heads(u);
    const auto ws = g.weights(u);
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (detail::relax(st, u, hs[i], ws[i])) {
        heap.emplace(st.dist[hs[i]], hs[i]);
        ++st.stats.queue_pushes;
      }
    }
  }
  return detail::finish(std::move(st), s, false, kNoVertex, started);
}

SsspResult run_algorithm(Algorithm algo, const Graph& g, VertexId s, const RunOptions& opts) {
  switch (algo) {
    case Algorithm::BellmanFord: return bellman_ford(g, s);
    case Algorithm::SpfaFifo: return spfa_fifo(g, s);
    case Algorithm::SpfaSlf: return spfa_slf(g, s);
    case Algorithm::Dijkstra: return dijkstra_oracle(g, s);
    case Algorithm::JfrStrict: return jfr_strict(g, s, opts.strict_k, opts.observer);
    case Algorithm::JfrPq: return jfr_pq(g, s, opts.pq, opts.observer);
  }
  throw Error(ErrorCode::UnknownAlgorithm, "unhandled algorithm");
}

}  // namespace jfr

#include <algorithm>

#include "relax.hpp"

namespace jfr {

double cycle_weight(const Graph& g, std::span<const VertexId> cycle) {
  double total = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const VertexId u = cycle[i];
    const VertexId v = cycle[(i + 1) % cycle.size()];
    double best = kInfinity;
    const auto hs = g.heads(u);
    const auto ws = g.weights(u);
    for (std::size_t j = 0; j < hs.size(); ++j) {
      if (hs[j] == v) best = std::min(best, ws[j]);
    }
    total += best;  // +inf when the hop is not an edge
  }
  return total;
}

namespace {

// Walks parents from `start` until a vertex repeats; returns the cycle in
// forward edge order, or nothing when the walk reaches a root.
std::optional<std::vector<VertexId>> cycle_from(std::span<const VertexId> parent, VertexId start) {
  const std::size_t n = parent.size();
  VertexId v = start;
  for (std::size_t step = 0; step < n && v != kNoVertex; ++step) v = parent[v];
  if (v == kNoVertex) return std::nullopt;

  // v is now on a cycle when one exists; collect it.
  std::vector<VertexId> reversed{v};
  for (VertexId u = parent[v]; u != v; u = parent[u]) {
    if (u == kNoVertex || reversed.size() > n) return std::nullopt;
    reversed.push_back(u);
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

std::optional<std::vector<VertexId>> negative_only(const Graph& g,
                                                   std::optional<std::vector<VertexId>> c) {
  if (c && cycle_weight(g, *c) < 0) return c;
  return std::nullopt;
}

// Independent search: Bellman-Ford passes from the source, checking the
// parent graph after every pass beyond n-1.
std::optional<std::vector<VertexId>> search_from_source(const Graph& g, VertexId s) {
  const std::size_t n = g.num_vertices();
  LabelState st(n, s, Algorithm::BellmanFord);
  for (std::size_t pass = 1; pass <= 4 * n + 4; ++pass) {
    bool improved = false;
    for (VertexId u = 0; u < n; ++u) {
      const auto hs = g.heads(u);
      const auto ws = g.weights(u);
      for (std::size_t i = 0; i < hs.size(); ++i) improved |= detail::relax(st, u, hs[i], ws[i]);
    }
    if (!improved) return std::nullopt;
    if (pass >= n) {
      if (const VertexId c = find_parent_cycle(st.parent); c != kNoVertex) {
        if (auto cyc = negative_only(g, cycle_from(st.parent, c))) return cyc;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<VertexId>> detect_negative_cycle(const SsspResult& result,
                                                           const Graph& g) {
  if (!result.neg_cycle) {
    throw Error(ErrorCode::NoCycleRecorded, "result does not report a negative cycle");
  }
  if (result.parent.size() != g.num_vertices()) {
    throw Error(ErrorCode::IndexOutOfRange, "result does not belong to this graph");
  }
  if (result.cycle_hint != kNoVertex) {
    if (auto c = negative_only(g, cycle_from(result.parent, result.cycle_hint))) return c;
  }
  if (const VertexId c = find_parent_cycle(result.parent); c != kNoVertex) {
    if (auto cyc = negative_only(g, cycle_from(result.parent, c))) return cyc;
  }
  return search_from_source(g, result.source);
}

std::vector<VertexId> reconstruct_path(const SsspResult& result, VertexId v) {
  if (result.neg_cycle) {
    throw Error(ErrorCode::NegCycleResult, "distances are undefined under a negative cycle");
  }
  if (v >= result.dist.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
  }
  if (result.dist[v] == kInfinity) {
    throw Error(ErrorCode::Unreachable, "vertex " + std::to_string(v));
  }
  std::vector<VertexId> path{v};
  while (path.back() != result.source) {
    const VertexId p = result.parent[path.back()];
    if (p == kNoVertex || path.size() > result.dist.size()) {
      throw Error(ErrorCode::Unreachable, "broken parent chain at " + std::to_string(path.back()));
    }
    path.push_back(p);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace jfr

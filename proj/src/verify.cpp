#include "jfr/verify.hpp"

namespace jfr {

VerifyReport check_optimality_conditions(const Graph& g, VertexId s, const SsspResult& result) {
  if (result.neg_cycle) {
    throw Error(ErrorCode::NegCycleResult, "result reports a negative cycle");
  }
  const std::size_t n = g.num_vertices();
  if (s >= n || result.dist.size() != n || result.parent.size() != n) {
    throw Error(ErrorCode::IndexOutOfRange, "result does not match the graph");
  }
  VerifyReport r;
  const auto& d = result.dist;

  for (VertexId u = 0; u < n; ++u) {
    if (d[u] == kInfinity) continue;
    const auto hs = g.heads(u);
    const auto ws = g.weights(u);
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (d[u] + ws[i] < d[hs[i]]) {
        r.triangle_ok = false;
        break;
      }
    }
    if (!r.triangle_ok) break;
  }

  if (d[s] != 0.0) r.parent_ok = false;
  for (VertexId v = 0; v < n && r.parent_ok; ++v) {
    if (v == s || d[v] == kInfinity) continue;
    const VertexId p = result.parent[v];
    if (p == kNoVertex || p >= n || d[p] == kInfinity) {
      r.parent_ok = false;
      break;
    }
    bool tight = false;
    const auto hs = g.heads(p);
    const auto ws = g.weights(p);
    for (std::size_t i = 0; i < hs.size() && !tight; ++i) {
      tight = hs[i] == v && d[p] + ws[i] == d[v];
    }
    r.parent_ok = tight;
  }
  // Tight parents along a chain that reaches s make every label the weight
  // of a real path, so together with the triangle check the labels are optimal.
  if (r.parent_ok) {
    std::vector<char> reaches(n, 0);
    reaches[s] = 1;
    std::vector<VertexId> chain;
    for (VertexId v = 0; v < n && r.parent_ok; ++v) {
      if (d[v] == kInfinity || reaches[v]) continue;
      chain.clear();
      VertexId u = v;
      while (!reaches[u] && chain.size() <= n) {
        chain.push_back(u);
        u = result.parent[u];
        if (u == kNoVertex) break;
      }
      if (u == kNoVertex || !reaches[u]) {
        r.parent_ok = false;
        break;
      }
      for (VertexId c : chain) reaches[c] = 1;
    }
  }
  r.distances_match = r.triangle_ok && r.parent_ok;
  return r;
}

VerifyReport oracle_compare(const Graph& g, VertexId s, const SsspResult& candidate) {
  return oracle_compare(g, s, candidate, bellman_ford(g, s));
}

VerifyReport oracle_compare(const Graph& g, VertexId s, const SsspResult& candidate,
                            const SsspResult& truth) {
  VerifyReport r;
  r.neg_cycle_agree = truth.neg_cycle == candidate.neg_cycle;
  if (!r.neg_cycle_agree) {
    r.distances_match = false;
    return r;
  }
  if (truth.neg_cycle) return r;

  if (candidate.dist.size() != truth.dist.size()) {
    r.distances_match = false;
    return r;
  }
  for (VertexId v = 0; v < truth.dist.size(); ++v) {
    if (candidate.dist[v] != truth.dist[v]) {
      r.distances_match = false;
      r.first_mismatch = Mismatch{v, truth.dist[v], candidate.dist[v]};
      break;
    }
  }
  if (candidate.parent.size() == truth.parent.size()) {
    const VerifyReport local = check_optimality_conditions(g, s, candidate);
    r.triangle_ok = local.triangle_ok;
    r.parent_ok = local.parent_ok;
  } else {
    r.triangle_ok = r.parent_ok = false;
  }
  return r;
}

}  // namespace jfr

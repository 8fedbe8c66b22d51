#include <algorithm>

#include "relax.hpp"

namespace jfr {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::BellmanFord: return "bf";
    case Algorithm::SpfaFifo: return "spfa";
    case Algorithm::SpfaSlf: return "slf";
    case Algorithm::Dijkstra: return "dijkstra";
    case Algorithm::JfrStrict: return "jfr-strict";
    case Algorithm::JfrPq: return "jfr-pq";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::BellmanFord, Algorithm::SpfaFifo, Algorithm::SpfaSlf,
                      Algorithm::Dijkstra, Algorithm::JfrStrict, Algorithm::JfrPq}) {
    if (name == to_string(a)) return a;
  }
  throw Error(ErrorCode::UnknownAlgorithm, "'" + std::string(name) + "'");
}

void validate(const JfrConfig& cfg) {
  if (cfg.k < 1) throw Error(ErrorCode::SpecInvalid, "k must be >= 1");
  if (!(cfg.filter_alpha > 0 && cfg.filter_alpha <= 1)) {
    throw Error(ErrorCode::SpecInvalid, "filter_alpha must lie in (0,1]");
  }
  if (cfg.stability_window < 1) throw Error(ErrorCode::SpecInvalid, "stability_window must be >= 1");
  if (cfg.filter_period < 1) throw Error(ErrorCode::SpecInvalid, "filter_period must be >= 1");
}

LabelState::LabelState(std::size_t n, VertexId source, Algorithm algorithm)
    : dist(n, kInfinity), parent(n, kNoVertex), dirty(n, 0) {
  stats.algorithm = algorithm;
  stats.activations.assign(n, 0);
  stats.improvements.assign(n, 0);
  if (source < n) {
    dist[source] = 0.0;
    dirty[source] = 1;
  }
}

LmhScratch::LmhScratch(std::size_t n) : queued_(n, 0), scanned_(n, 0), improved_(n, 0), window_(n, 0) {}

std::uint32_t LmhScratch::next_stamp() {
  if (++stamp_ == 0) {
    std::fill(queued_.begin(), queued_.end(), 0);
    std::fill(scanned_.begin(), scanned_.end(), 0);
    std::fill(improved_.begin(), improved_.end(), 0);
    std::fill(window_.begin(), window_.end(), 0);
    stamp_ = 1;
  }
  return stamp_;
}

LmhOutcome lmh_propagate(const Graph& g, std::span<const VertexId> seeds, unsigned k,
                         LabelState& st, LmhScratch& scratch, const LmhObserver* observer) {
  if (k < 1) throw Error(ErrorCode::SpecInvalid, "propagation depth must be >= 1");
  LmhOutcome out;
  if (seeds.empty()) return out;
  if (scratch.queued_.size() < g.num_vertices()) scratch = LmhScratch(g.num_vertices());

  const std::uint32_t call = scratch.next_stamp();
  LmhCallRecord record;
  record.depth = k;
  const std::uint64_t inspections_before = st.stats.lmh_inspections;
  const bool tracing = observer != nullptr && *observer;
  auto touch = [&](VertexId v) {
    if (tracing && scratch.window_[v] != call) {
      scratch.window_[v] = call;
      ++record.window_size;
      record.window_degree_sum += g.degree(v);
    }
  };

  std::vector<VertexId> active;
  active.reserve(seeds.size());
  for (VertexId s : seeds) {
    if (scratch.queued_[s] != call) {
      scratch.queued_[s] = call;
      active.push_back(s);
      touch(s);
    }
  }
  std::vector<VertexId> next;
  ++st.stats.lmh_calls;

  // queued_/scanned_ hold per-round stamps; they are re-stamped each round
  // so a vertex can be scanned once per round.
  std::uint32_t round_stamp = call;
  for (unsigned round = 1; round <= k && !active.empty(); ++round) {
    ++record.rounds;
    const std::uint32_t next_stamp = scratch.next_stamp();
    next.clear();
    for (VertexId u : active) {
      scratch.scanned_[u] = round_stamp;
      st.dirty[u] = 0;
      const auto hs = g.heads(u);
      const auto ws = g.weights(u);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        const VertexId v = hs[i];
        ++st.stats.lmh_inspections;
        const bool improved = detail::relax(st, u, v, ws[i]);
        touch(v);
        if (!improved) continue;
        if (scratch.improved_[v] != call) {
          scratch.improved_[v] = call;
          out.improved.push_back(v);
        }
        // A vertex still waiting for its scan this round picks up the new
        // label then; everything else is rescanned next round.
        const bool pending_this_round =
            scratch.queued_[v] == round_stamp && scratch.scanned_[v] != round_stamp;
        if (!pending_this_round && scratch.queued_[v] != next_stamp) {
          scratch.queued_[v] = next_stamp;
          next.push_back(v);
        }
      }
    }
    active.swap(next);
    round_stamp = next_stamp;
  }

  for (VertexId v : out.improved) {
    if (st.dirty[v]) out.unsettled.push_back(v);
  }
  if (tracing) {
    record.inspections = st.stats.lmh_inspections - inspections_before;
    (*observer)(record);
  }
  return out;
}

LmhOutcome lmh_propagate(const Graph& g, std::span<const VertexId> seeds, unsigned k,
                         LabelState& state) {
  LmhScratch scratch(g.num_vertices());
  return lmh_propagate(g, seeds, k, state, scratch, nullptr);
}

VertexId find_parent_cycle(std::span<const VertexId> parent) {
  const std::size_t n = parent.size();
  // 0 = unvisited, otherwise the id of the walk that first reached the vertex.
  std::vector<std::uint32_t> walk_of(n, 0);
  std::uint32_t walk = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (walk_of[start] != 0) continue;
    ++walk;
    VertexId v = static_cast<VertexId>(start);
    while (v != kNoVertex && walk_of[v] == 0) {
      walk_of[v] = walk;
      v = parent[v];
    }
    if (v != kNoVertex && walk_of[v] == walk) return v;
  }
  return kNoVertex;
}

namespace detail {

void check_source(const Graph& g, VertexId s) {
  if (s >= g.num_vertices()) {
    throw Error(ErrorCode::IndexOutOfRange, "source " + std::to_string(s) +
                                                " with n=" + std::to_string(g.num_vertices()));
  }
}

SsspResult finish(LabelState&& st, VertexId s, bool neg_cycle, VertexId hint,
                  std::chrono::steady_clock::time_point started) {
  SsspResult r;
  r.source = s;
  r.neg_cycle = neg_cycle;
  r.cycle_hint = neg_cycle ? hint : kNoVertex;
  r.dist = std::move(st.dist);
  r.parent = std::move(st.parent);
  r.stats = std::move(st.stats);
  r.stats.wall_time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
  return r;
}

}  // namespace detail
}  // namespace jfr

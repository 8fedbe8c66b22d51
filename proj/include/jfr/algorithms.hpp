#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "jfr/graph.hpp"

namespace jfr {

enum class Algorithm { BellmanFord, SpfaFifo, SpfaSlf, Dijkstra, JfrStrict, JfrPq };

/// CLI names: bf, spfa, slf, dijkstra, jfr-strict, jfr-pq.
std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);  // throws UnknownAlgorithm

/// Instrumentation shared by every solver.
///
/// An edge inspection is one evaluation of d[u] + w(u,v) against d[v].
/// `activations[v]` is s(v): how often v was selected for a scan of its
/// out-edges outside of multi-hop propagation (a frontier entry for the
/// strict mode, a non-stale pop for queue-driven solvers, a pass for
/// Bellman-Ford). `improvements[v]` is D_v: strict decreases of d[v].
struct RunStats {
  Algorithm algorithm = Algorithm::BellmanFord;
  unsigned depth_k = 0;  // depth parameter for the JFR modes, 0 otherwise
  std::uint64_t edge_inspections = 0;
  std::uint64_t successful_relaxations = 0;
  std::uint64_t lmh_inspections = 0;
  std::uint64_t lmh_calls = 0;
  std::uint64_t queue_pushes = 0;
  std::uint64_t stale_pops = 0;
  std::uint64_t outer_iterations = 0;
  std::vector<std::uint32_t> activations;
  std::vector<std::uint32_t> improvements;
  std::int64_t wall_time_ns = 0;
};

struct SsspResult {
  VertexId source = 0;
  std::vector<double> dist;        // +inf for unreachable vertices
  std::vector<VertexId> parent;    // kNoVertex where undefined
  bool neg_cycle = false;
  VertexId cycle_hint = kNoVertex;  // vertex from which a negative cycle is reachable via parents
  RunStats stats;
};

enum class JfrMode { StrictK, PqDynamic };

struct JfrConfig {
  JfrMode mode = JfrMode::PqDynamic;
  unsigned k = 2;
  double filter_alpha = 0.1;
  unsigned stability_window = 8;
  unsigned filter_period = 64;  // pops between evaluations of the filtering condition
};

void validate(const JfrConfig& cfg);  // throws SpecInvalid

/// Active-vertex set with O(1) insert, erase and membership test.
class Frontier {
 public:
  explicit Frontier(std::size_t n = 0) : pos_(n, kAbsent) {}

  [[nodiscard]] bool contains(VertexId v) const noexcept { return pos_[v] != kAbsent; }
  [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
  [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
  [[nodiscard]] std::span<const VertexId> items() const noexcept { return items_; }

  bool insert(VertexId v) {
    if (contains(v)) return false;
    pos_[v] = static_cast<std::uint32_t>(items_.size());
    items_.push_back(v);
    return true;
  }

  bool erase(VertexId v) {
    if (!contains(v)) return false;
    const std::uint32_t at = pos_[v];
    const VertexId last = items_.back();
    items_[at] = last;
    pos_[last] = at;
    items_.pop_back();
    pos_[v] = kAbsent;
    return true;
  }

  void clear() {
    for (VertexId v : items_) pos_[v] = kAbsent;
    items_.clear();
  }

 private:
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> pos_;
  std::vector<VertexId> items_;
};

/// Tentative labels plus per-vertex dirty flags (improved since last scan).
struct LabelState {
  LabelState(std::size_t n, VertexId source, Algorithm algorithm);

  std::vector<double> dist;
  std::vector<VertexId> parent;
  std::vector<char> dirty;
  RunStats stats;
};

/// Per-call record of one multi-hop propagation, for cost-bound checks.
struct LmhCallRecord {
  unsigned depth = 0;
  std::size_t rounds = 0;
  std::uint64_t inspections = 0;
  std::size_t window_size = 0;             // seeds plus every head reached
  std::uint64_t window_degree_sum = 0;     // sum of out-degrees over the window
};

using LmhObserver = std::function<void(const LmhCallRecord&)>;

struct LmhOutcome {
  std::vector<VertexId> improved;   // every vertex strictly improved, first-improvement order
  std::vector<VertexId> unsettled;  // improved after their last scan in this call
};

/// Reusable scratch marks for lmh_propagate.
class LmhScratch {
 public:
  explicit LmhScratch(std::size_t n = 0);

 private:
  friend LmhOutcome lmh_propagate(const Graph&, std::span<const VertexId>, unsigned, LabelState&,
                                  LmhScratch&, const LmhObserver*);
  std::uint32_t next_stamp();

  std::uint32_t stamp_ = 0;
  std::vector<std::uint32_t> queued_;
  std::vector<std::uint32_t> scanned_;
  std::vector<std::uint32_t> improved_;
  std::vector<std::uint32_t> window_;
};

/// Depth-limited relaxation from `seeds`: round 1 scans the seeds, round r+1
/// scans the vertices improved in round r, for at most k rounds. Afterwards
/// every path of at most k edges leaving a seed is consistent with the labels.
/// Inspections count towards both edge_inspections and lmh_inspections.
LmhOutcome lmh_propagate(const Graph& g, std::span<const VertexId> seeds, unsigned k,
                         LabelState& state, LmhScratch& scratch,
                         const LmhObserver* observer = nullptr);
LmhOutcome lmh_propagate(const Graph& g, std::span<const VertexId> seeds, unsigned k,
                         LabelState& state);

/// Bookkeeping the queue-driven JFR mode keeps for filtering.
struct StabilityAux {
  explicit StabilityAux(std::size_t n = 0)
      : last_improved_at(n, 0), queued_key(n, kInfinity) {}

  std::vector<std::uint64_t> last_improved_at;  // selection index of the latest improvement
  std::vector<double> queued_key;               // key of the freshest queue entry
  std::uint64_t selections = 0;
  unsigned stability_window = 8;
};

/// Drops from the frontier every vertex that has been scanned since its last
/// improvement, has not improved within the stability window, and whose
/// freshest queue key equals its label. Returns the number removed.
std::size_t filter_stable_vertices(Frontier& frontier, const LabelState& state,
                                   const StabilityAux& aux);

SsspResult bellman_ford(const Graph& g, VertexId s);
SsspResult spfa_fifo(const Graph& g, VertexId s);
SsspResult spfa_slf(const Graph& g, VertexId s);
SsspResult dijkstra_oracle(const Graph& g, VertexId s);  // throws NegativeWeightPresent
SsspResult jfr_strict(const Graph& g, VertexId s, unsigned k,
                      const LmhObserver* observer = nullptr);
SsspResult jfr_pq(const Graph& g, VertexId s, const JfrConfig& cfg = {},
                  const LmhObserver* observer = nullptr);

struct RunOptions {
  unsigned strict_k = 4;
  JfrConfig pq;
  const LmhObserver* observer = nullptr;
};

SsspResult run_algorithm(Algorithm algo, const Graph& g, VertexId s, const RunOptions& opts = {});

/// Vertex sequence c0..c_{L-1} with edges c_i -> c_{i+1} and c_{L-1} -> c0,
/// each of strictly negative total weight. Throws NoCycleRecorded when the
/// result does not report a negative cycle.
std::optional<std::vector<VertexId>> detect_negative_cycle(const SsspResult& result,
                                                           const Graph& g);

/// Sum of the cheapest parallel edge along each hop of a closed walk.
double cycle_weight(const Graph& g, std::span<const VertexId> cycle);

/// Source-to-v vertex sequence following parent pointers.
std::vector<VertexId> reconstruct_path(const SsspResult& result, VertexId v);

/// A vertex lying on a cycle of the parent graph, or kNoVertex.
VertexId find_parent_cycle(std::span<const VertexId> parent);

}  // namespace jfr

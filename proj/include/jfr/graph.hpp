#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jfr/error.hpp"

namespace jfr {

using VertexId = std::uint32_t;
using Weight = double;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Edge {
  VertexId tail;
  VertexId head;
  Weight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct OutEdge {
  VertexId head;
  Weight weight;

  friend bool operator==(const OutEdge&, const OutEdge&) = default;
};

/// Plain edge-list document: the unvalidated interchange form of a graph.
struct EdgeListDoc {
  std::size_t n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const EdgeListDoc&, const EdgeListDoc&) = default;
};

/// Checks index ranges, weight finiteness and the negative self-loop rule.
/// Throws Error on the first violation.
void validate(const EdgeListDoc& doc);

/// Immutable directed weighted graph in compressed adjacency (CSR) form.
///
/// Out-edges of each vertex appear in the order they were supplied, so
/// construction from an edge list is order-preserving per tail.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  static Graph from_edge_list(const EdgeListDoc& doc);

  [[nodiscard]] std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  [[nodiscard]] std::size_t num_edges() const noexcept { return targets_.size(); }

  /// Heads and weights of the out-edges of u, as parallel spans.
  [[nodiscard]] std::span<const VertexId> heads(VertexId u) const noexcept {
    return {targets_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  [[nodiscard]] std::span<const Weight> weights(VertexId u) const noexcept {
    return {weights_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  [[nodiscard]] std::size_t degree(VertexId u) const noexcept {
    return offsets_[u + 1] - offsets_[u];
  }

  /// Checked accessor; throws IndexOutOfRange when u >= n.
  [[nodiscard]] std::vector<OutEdge> out_edges(VertexId u) const;

  [[nodiscard]] bool has_negative_weight() const noexcept;

  [[nodiscard]] EdgeListDoc to_edge_list() const;

  [[nodiscard]] std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  [[nodiscard]] std::span<const VertexId> targets() const noexcept { return targets_; }
  [[nodiscard]] std::span<const Weight> edge_weights() const noexcept { return weights_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
  std::vector<Weight> weights_;
};

// Text edge-list format: header "n m", then m lines "tail head weight".
// Lines whose first character is '#' are comments.
EdgeListDoc read_text(std::string_view text);
std::string write_text(const EdgeListDoc& doc);

EdgeListDoc read_text_file(const std::string& path);
void write_text_file(const std::string& path, const EdgeListDoc& doc);

/// Shortest decimal form that parses back to the same double.
std::string format_weight(double w);

}  // namespace jfr

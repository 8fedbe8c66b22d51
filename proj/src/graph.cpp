#include "jfr/graph.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace jfr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonFiniteWeight: return "NonFiniteWeight";
    case ErrorCode::NegativeSelfLoop: return "NegativeSelfLoop";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::PotentialUnavailable: return "PotentialUnavailable";
    case ErrorCode::NegativeWeightPresent: return "NegativeWeightPresent";
    case ErrorCode::NoCycleRecorded: return "NoCycleRecorded";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::ZeroOps: return "ZeroOps";
    case ErrorCode::NegCycleResult: return "NegCycleResult";
    case ErrorCode::UnknownAlgorithm: return "UnknownAlgorithm";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

void validate(const EdgeListDoc& doc) {
  if (doc.n > static_cast<std::size_t>(kNoVertex)) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex count exceeds 32-bit id space");
  }
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const Edge& e = doc.edges[i];
    if (e.tail >= doc.n || e.head >= doc.n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge " + std::to_string(i) + " (" + std::to_string(e.tail) + "," +
                      std::to_string(e.head) + ") with n=" + std::to_string(doc.n));
    }
    if (!std::isfinite(e.weight)) {
      throw Error(ErrorCode::NonFiniteWeight, "edge " + std::to_string(i));
    }
    if (e.tail == e.head && e.weight < 0) {
      throw Error(ErrorCode::NegativeSelfLoop,
                  "self-loop at vertex " + std::to_string(e.tail));
    }
  }
}

Graph Graph::from_edge_list(const EdgeListDoc& doc) {
  validate(doc);
  Graph g;
  const std::size_t n = doc.n;
  const std::size_t m = doc.edges.size();
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : doc.edges) ++g.offsets_[e.tail + 1];
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] += g.offsets_[u];

  g.targets_.resize(m);
  g.weights_.resize(m);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Stable bucket fill keeps per-tail input order.
  for (const Edge& e : doc.edges) {
    const std::size_t slot = cursor[e.tail]++;
    g.targets_[slot] = e.head;
    g.weights_[slot] = e.weight;
  }
  return g;
}

std::vector<OutEdge> Graph::out_edges(VertexId u) const {
  if (u >= num_vertices()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(u) + " with n=" + std::to_string(num_vertices()));
  }
  std::vector<OutEdge> out;
  out.reserve(degree(u));
  const auto hs = heads(u);
  const auto ws = weights(u);
  for (std::size_t i = 0; i < hs.size(); ++i) out.push_back({hs[i], ws[i]});
  return out;
}

bool Graph::has_negative_weight() const noexcept {
  for (Weight w : weights_) {
    if (w < 0) return true;
  }
  return false;
}

EdgeListDoc Graph::to_edge_list() const {
  EdgeListDoc doc;
  doc.n = num_vertices();
  doc.edges.reserve(num_edges());
  for (VertexId u = 0; u < doc.n; ++u) {
    const auto hs = heads(u);
    const auto ws = weights(u);
    for (std::size_t i = 0; i < hs.size(); ++i) doc.edges.push_back({u, hs[i], ws[i]});
  }
  return doc;
}

std::string format_weight(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits on runs of spaces/tabs.
std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line_no, const char* what) {
  T value{};
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad " + what +
                                           " '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

EdgeListDoc read_text(std::string_view text) {
  EdgeListDoc doc;
  bool have_header = false;
  std::size_t declared_m = 0;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto toks = tokens(line);

    if (!have_header) {
      if (toks.size() != 2) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": expected header 'n m'");
      }
      doc.n = parse_number<std::size_t>(toks[0], line_no, "vertex count");
      declared_m = parse_number<std::size_t>(toks[1], line_no, "edge count");
      doc.edges.reserve(declared_m);
      have_header = true;
      continue;
    }
    if (toks.size() != 3) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'tail head weight'");
    }
    const auto tail = parse_number<std::uint64_t>(toks[0], line_no, "tail");
    const auto head = parse_number<std::uint64_t>(toks[1], line_no, "head");
    const double w = parse_number<double>(toks[2], line_no, "weight");
    if (tail > kNoVertex || head > kNoVertex) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": index too large");
    }
    doc.edges.push_back({static_cast<VertexId>(tail), static_cast<VertexId>(head), w});
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing header line");
  if (doc.edges.size() != declared_m) {
    throw Error(ErrorCode::HeaderMismatch, "header declares " + std::to_string(declared_m) +
                                               " edges, found " +
                                               std::to_string(doc.edges.size()));
  }
  return doc;
}

std::string write_text(const EdgeListDoc& doc) {
  std::string out;
  out.reserve(16 + doc.edges.size() * 20);
  out += std::to_string(doc.n);
  out += ' ';
  out += std::to_string(doc.edges.size());
  out += '\n';
  for (const Edge& e : doc.edges) {
    out += std::to_string(e.tail);
    out += ' ';
    out += std::to_string(e.head);
    out += ' ';
    out += format_weight(e.weight);
    out += '\n';
  }
  return out;
}

EdgeListDoc read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_text(ss.str());
}

void write_text_file(const std::string& path, const EdgeListDoc& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << write_text(doc);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace jfr

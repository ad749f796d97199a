#pragma once

// Finite directed multigraphs and the free semigroupoid of admissible paths.
//
// Paths are read in travel order: w = e_1 e_2 ... e_n is admissible iff
// final(e_i) == initial(e_{i+1}). Vertex words (no edges) are the units of
// the semigroupoid at their vertex.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gwp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  std::string name;
  VertexId initial;
  VertexId final;
};

struct EdgeSpec {
  std::string name;
  std::string initial;
  std::string final;
};

namespace detail {
struct GraphData;
}

/// Immutable directed multigraph. Copies share the same underlying data and
/// compare equal; two independently built graphs never do.
class Graph {
 public:
  /// Throws PreconditionError on duplicate or undeclared identifiers.
  Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const;
  std::size_t edge_count() const;

  const std::string& vertex_name(VertexId v) const;
  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const;

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// Outgoing edges of v in declaration order.
  std::span<const EdgeId> out_edges(VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.data_ == b.data_; }

 private:
  std::shared_ptr<const detail::GraphData> data_;
};

/// An element of the free semigroupoid: a vertex word or an admissible path.
class PathWord {
 public:
  static PathWord vertex(const Graph& g, VertexId v);
  static PathWord edge(const Graph& g, EdgeId e);
  /// Throws PreconditionError when the sequence is empty or not admissible.
  static PathWord from_edges(const Graph& g, std::vector<EdgeId> edges);

  const Graph& graph() const noexcept { return graph_; }
  VertexId initial() const noexcept { return initial_; }
  VertexId final() const noexcept { return final_; }
  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::size_t length() const noexcept { return edges_.size(); }
  bool is_vertex() const noexcept { return edges_.empty(); }
  bool is_loop() const noexcept { return !edges_.empty() && initial_ == final_; }

  /// True when this == prefix * rest for some rest (vertex prefixes included).
  bool has_prefix(const PathWord& prefix) const;
  /// The rest after removing a known prefix.
  PathWord strip_prefix(const PathWord& prefix) const;
  /// The first n edges (a vertex word at initial() when n == 0).
  PathWord take(std::size_t n) const;

  /// Vertex words first (by vertex), then by length, then lexicographic by
  /// edge declaration order. Words from different graphs are never mixed in
  /// one container, so the graph does not take part in the order.
  friend std::strong_ordering operator<=>(const PathWord& a, const PathWord& b);
  friend bool operator==(const PathWord& a, const PathWord& b) {
    return a.initial_ == b.initial_ && a.final_ == b.final_ && a.edges_ == b.edges_;
  }

 private:
  PathWord(Graph g, std::vector<EdgeId> edges, VertexId initial, VertexId final)
      : graph_(std::move(g)), edges_(std::move(edges)), initial_(initial), final_(final) {}

  Graph graph_;
  std::vector<EdgeId> edges_;
  VertexId initial_;
  VertexId final_;
};

/// Throws PreconditionError when the words belong to different graphs.
void require_same_graph(const PathWord& a, const PathWord& b);

/// Travel a then b; nullopt when final(a) != initial(b).
std::optional<PathWord> concat(const PathWord& a, const PathWord& b);

/// All of F+(G) up to max_len: vertex words, then paths by length, then
/// lexicographically by edge declaration order.
std::vector<PathWord> enumerate_paths(const Graph& g, std::size_t max_len);

struct PrimitiveRoot {
  PathWord root;
  std::size_t power;
};

/// Shortest loop p with w == p^k. w must be a loop.
PrimitiveRoot primitive_root(const PathWord& w);

/// A loop of length >= 1 that is not a proper power.
bool is_basic_loop(const PathWord& w);

/// Different diagrams: unequal and not powers of a common primitive loop.
/// Rotations of a loop (ef vs fe) count as distinct.
bool diagram_distinct(const PathWord& a, const PathWord& b);

struct EdgeClassification {
  std::vector<EdgeId> loop_edges;
  std::vector<EdgeId> non_loop_edges;
};

EdgeClassification classify_edges(const Graph& g);

/// Parses the line-oriented graph format:
///   # comment
///   vertices: v1 v2
///   edge e: v1 -> v2
/// Throws ParseError with the offending line and column.
Graph parse_graph(std::string_view text);

/// "e.f.g" for paths, "@v" for vertex words.
std::string format_path(const PathWord& w);

/// Inverse of format_path. Throws PreconditionError on unknown identifiers or
/// non-admissible sequences.
PathWord parse_path(const Graph& g, std::string_view text);

}  // namespace gwp

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pvc {

/// Dense 0-based vertex index inside one Graph.
using VertexId = std::uint32_t;
/// Stable external vertex name (the 1-based id of the input file).
using Label = std::uint64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

using Edge = std::pair<VertexId, VertexId>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Vertices are dense indices 0..n-1, each carrying an external label that
/// survives vertex deletion. Neighbor lists are sorted ascending and all
/// iteration happens in index order, so everything computed from a Graph is
/// deterministic.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices labelled 1..n. Duplicate edges (in either
  /// orientation) collapse; self-loops and out-of-range endpoints throw
  /// std::invalid_argument.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  /// Same, with explicit labels (labels.size() is the vertex count).
  static Graph from_edges(std::vector<Label> labels, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  Label label(VertexId v) const { return labels_[v]; }
  std::span<const Label> labels() const noexcept { return labels_; }

  /// Edges as (u, v) with u < v, in ascending lexicographic order.
  std::vector<Edge> edges() const;

  bool contains(VertexId v) const noexcept { return v < num_vertices(); }

 private:
  std::vector<Label> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
};

/// G - S together with the old-to-new index map (kNoVertex for deleted).
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> old_to_new;
};

/// Returns G - S. Throws std::invalid_argument on an unknown vertex id.
InducedSubgraph delete_vertices(const Graph& g, std::span<const VertexId> s);

/// |E(G - S)| without building the subgraph.
std::size_t edges_after_delete(const Graph& g, std::span<const VertexId> s);

/// Membership mask for a vertex set; throws std::invalid_argument on ids
/// outside the graph.
std::vector<bool> vertex_mask(const Graph& g, std::span<const VertexId> s);

/// Bipartite subgraph H[A, B] of a host graph.
///
/// A and B keep their host ids; adjacency is stored by side-local position
/// (a_adj[i] lists positions in B, b_adj[j] lists positions in A), both
/// sorted ascending.
class BipartiteView {
 public:
  BipartiteView() = default;

  std::size_t size_a() const noexcept { return a_.size(); }
  std::size_t size_b() const noexcept { return b_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const VertexId> side_a() const noexcept { return a_; }
  std::span<const VertexId> side_b() const noexcept { return b_; }
  VertexId a_vertex(std::size_t i) const { return a_[i]; }
  VertexId b_vertex(std::size_t j) const { return b_[j]; }

  std::span<const std::uint32_t> a_neighbors(std::size_t i) const { return a_adj_[i]; }
  std::span<const std::uint32_t> b_neighbors(std::size_t j) const { return b_adj_[j]; }

  /// Side-local position of a host vertex, or kNoVertex.
  std::uint32_t a_position(VertexId v) const;
  std::uint32_t b_position(VertexId v) const;

  /// The view restricted to the kept positions of each side.
  BipartiteView restrict_to(const std::vector<bool>& keep_a, const std::vector<bool>& keep_b) const;

  friend BipartiteView bipartite_view(const Graph& g, std::span<const VertexId> a,
                                      std::span<const VertexId> b);

 private:
  std::vector<VertexId> a_;
  std::vector<VertexId> b_;
  std::vector<std::vector<std::uint32_t>> a_adj_;
  std::vector<std::vector<std::uint32_t>> b_adj_;
  std::size_t num_edges_ = 0;
};

/// H = G[A, B]: every host edge with one endpoint in each side. Sides are
/// sorted and deduplicated. Throws std::invalid_argument if A and B overlap.
BipartiteView bipartite_view(const Graph& g, std::span<const VertexId> a,
                             std::span<const VertexId> b);

/// Parses the DIMACS-like edge format:
///   c <comment>
///   p edge <n> <m>
///   e <u> <v>        (1-based ids)
/// Labels are the 1-based ids. Throws ParseError.
Graph parse_graph(std::string_view text);

/// Writes the canonical form: header then "e u v" with u < v ascending,
/// using 1-based indices.
std::string serialize_graph(const Graph& g);

}  // namespace pvc

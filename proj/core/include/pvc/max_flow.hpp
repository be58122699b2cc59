#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pvc {

/// Directed flow network solved with Dinic's algorithm.
///
/// Arcs are scanned in insertion order in both the level BFS and the
/// blocking-flow DFS, so the final flow, and therefore the residual
/// reachability set, is a deterministic function of the construction order.
class FlowNetwork {
 public:
  using Capacity = std::int64_t;
  using Node = std::uint32_t;

  explicit FlowNetwork(std::size_t num_nodes);

  /// Adds arc from -> to and returns its id for flow().
  std::size_t add_arc(Node from, Node to, Capacity capacity);

  /// Maximum flow value from source to sink. Call once per network.
  Capacity max_flow(Node source, Node sink);

  Capacity flow(std::size_t arc) const { return arcs_[arc].flow; }

  /// Nodes reachable from `source` through arcs with residual capacity; after
  /// max_flow this is the source side of the minimal minimum cut.
  std::vector<bool> residual_reachable(Node source) const;

  std::size_t num_nodes() const noexcept { return out_.size(); }

 private:
  struct Arc {
    Node to;
    Capacity capacity;
    Capacity flow;
  };

  Capacity push(Node u, Node sink, Capacity limit);

  std::vector<Arc> arcs_;  // arc 2i is forward, 2i+1 its reverse
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::int32_t> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace pvc

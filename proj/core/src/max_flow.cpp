#include "pvc/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace pvc {

FlowNetwork::FlowNetwork(std::size_t num_nodes) : out_(num_nodes) {}

std::size_t FlowNetwork::add_arc(Node from, Node to, Capacity capacity) {
  if (from >= out_.size() || to >= out_.size()) throw std::invalid_argument("add_arc: node out of range");
  if (capacity < 0) throw std::invalid_argument("add_arc: negative capacity");
  const auto id = arcs_.size();
  arcs_.push_back({to, capacity, 0});
  arcs_.push_back({from, 0, 0});
  out_[from].push_back(static_cast<std::uint32_t>(id));
  out_[to].push_back(static_cast<std::uint32_t>(id + 1));
  return id;
}

FlowNetwork::Capacity FlowNetwork::push(Node u, Node sink, Capacity limit) {
  if (u == sink) return limit;
  for (auto& i = cursor_[u]; i < out_[u].size(); ++i) {
    const auto id = out_[u][i];
    auto& arc = arcs_[id];
    const auto residual = arc.capacity - arc.flow;
    if (residual <= 0 || level_[arc.to] != level_[u] + 1) continue;
    const auto pushed = push(arc.to, sink, std::min(limit, residual));
    if (pushed > 0) {
      arc.flow += pushed;
      arcs_[id ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

FlowNetwork::Capacity FlowNetwork::max_flow(Node source, Node sink) {
  if (source == sink) throw std::invalid_argument("max_flow: source equals sink");
  Capacity total = 0;
  const auto n = out_.size();
  for (;;) {
    level_.assign(n, -1);
    level_[source] = 0;
    std::queue<Node> bfs;
    bfs.push(source);
    while (!bfs.empty()) {
      const auto u = bfs.front();
      bfs.pop();
      for (auto id : out_[u]) {
        const auto& arc = arcs_[id];
        if (arc.capacity - arc.flow > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[u] + 1;
          bfs.push(arc.to);
        }
      }
    }
    if (level_[sink] < 0) break;
    cursor_.assign(n, 0);
    while (auto pushed = push(source, sink, std::numeric_limits<Capacity>::max())) total += pushed;
  }
  return total;
}

std::vector<bool> FlowNetwork::residual_reachable(Node source) const {
  std::vector<bool> seen(out_.size(), false);
  std::queue<Node> bfs;
  seen[source] = true;
  bfs.push(source);
  while (!bfs.empty()) {
    const auto u = bfs.front();
    bfs.pop();
    for (auto id : out_[u]) {
      const auto& arc = arcs_[id];
      if (arc.capacity - arc.flow > 0 && !seen[arc.to]) {
        seen[arc.to] = true;
        bfs.push(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace pvc

#include "pvc/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace pvc {

namespace {
constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
}

Matching hopcroft_karp(const BipartiteAdjacency& left_adj, std::size_t n_right) {
  const std::size_t n_left = left_adj.size();
  Matching m;
  m.mate_left.assign(n_left, kUnmatched);
  m.mate_right.assign(n_right, kUnmatched);

  std::vector<std::uint32_t> dist(n_left);
  std::vector<std::size_t> next(n_left);
  std::vector<std::uint32_t> stack;

  for (;;) {
    // Layer the left side by alternating BFS from every free left vertex.
    std::queue<std::uint32_t> bfs;
    for (std::uint32_t u = 0; u < n_left; ++u) {
      if (m.mate_left[u] == kUnmatched) {
        dist[u] = 0;
        bfs.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    std::uint32_t free_layer = kInf;
    while (!bfs.empty()) {
      const auto u = bfs.front();
      bfs.pop();
      if (dist[u] >= free_layer) continue;
      for (auto v : left_adj[u]) {
        const auto w = m.mate_right[v];
        if (w == kUnmatched) {
          if (free_layer == kInf) free_layer = dist[u] + 1;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          bfs.push(w);
        }
      }
    }
    if (free_layer == kInf) break;

    // Vertex-disjoint shortest augmenting paths, iterative DFS.
    std::fill(next.begin(), next.end(), 0);
    for (std::uint32_t root = 0; root < n_left; ++root) {
      if (m.mate_left[root] != kUnmatched) continue;
      stack.assign(1, root);
      while (!stack.empty()) {
        const auto x = stack.back();
        if (next[x] == left_adj[x].size()) {
          dist[x] = kInf;
          stack.pop_back();
          continue;
        }
        const auto v = left_adj[x][next[x]];
        const auto w = m.mate_right[v];
        if (w == kUnmatched && dist[x] + 1 == free_layer) {
          for (auto y : stack) {
            const auto vy = left_adj[y][next[y]];
            m.mate_left[y] = vy;
            m.mate_right[vy] = y;
          }
          ++m.size;
          break;
        }
        if (w != kUnmatched && dist[w] != kInf && dist[w] == dist[x] + 1) {
          stack.push_back(w);
        } else {
          ++next[x];
        }
      }
    }
  }
  return m;
}

VertexCover konig_cover(const BipartiteAdjacency& left_adj, const Matching& matching) {
  const std::size_t n_left = left_adj.size();
  const std::size_t n_right = matching.mate_right.size();
  std::vector<bool> reach_left(n_left, false), reach_right(n_right, false);
  std::queue<std::uint32_t> bfs;
  for (std::uint32_t u = 0; u < n_left; ++u) {
    if (matching.mate_left[u] == kUnmatched) {
      reach_left[u] = true;
      bfs.push(u);
    }
  }
  while (!bfs.empty()) {
    const auto u = bfs.front();
    bfs.pop();
    for (auto v : left_adj[u]) {
      if (reach_right[v] || matching.mate_left[u] == v) continue;
      reach_right[v] = true;
      const auto w = matching.mate_right[v];
      if (w != kUnmatched && !reach_left[w]) {
        reach_left[w] = true;
        bfs.push(w);
      }
    }
  }
  VertexCover cover;
  cover.left.resize(n_left);
  cover.right = std::move(reach_right);
  for (std::size_t u = 0; u < n_left; ++u) cover.left[u] = !reach_left[u];
  return cover;
}

}  // namespace pvc

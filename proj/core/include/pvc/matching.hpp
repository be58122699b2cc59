#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pvc {

inline constexpr std::uint32_t kUnmatched = 0xFFFFFFFFu;

/// Left-to-right adjacency of a bipartite graph; right vertices are 0..n_right-1.
using BipartiteAdjacency = std::vector<std::vector<std::uint32_t>>;

struct Matching {
  std::vector<std::uint32_t> mate_left;   // kUnmatched if free
  std::vector<std::uint32_t> mate_right;  // kUnmatched if free
  std::size_t size = 0;
};

/// Maximum-cardinality matching by Hopcroft-Karp. Free left vertices are
/// processed in ascending order and neighbor lists in their stored order,
/// so the result is a deterministic function of the input.
Matching hopcroft_karp(const BipartiteAdjacency& left_adj, std::size_t n_right);

struct VertexCover {
  std::vector<bool> left;
  std::vector<bool> right;
};

/// Minimum vertex cover from a maximum matching (König): with Z the vertices
/// reachable from free left vertices by alternating paths, the cover is
/// (L \ Z) ∪ (R ∩ Z).
VertexCover konig_cover(const BipartiteAdjacency& left_adj, const Matching& matching);

}  // namespace pvc

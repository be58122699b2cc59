#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

/// Optimal half-integral solution of the vertex-cover LP relaxation.
///
/// Values are stored doubled: 0, 1, 2 stand for x_v = 0, 1/2, 1.
struct HalfIntegralSolution {
  std::vector<std::uint8_t> doubled;
  std::vector<VertexId> v0;
  std::vector<VertexId> v1;
  std::vector<VertexId> vhalf;
  std::uint64_t doubled_value = 0;  // 2 * sum x_v
};

/// Builds the doubled bipartite graph (u_L - v_R and v_L - u_R per edge uv),
/// takes a maximum matching and a König cover C, and sets
/// x_v = |{v_L, v_R} ∩ C| / 2.
HalfIntegralSolution solve_vclp(const Graph& g);

/// Assembles a solution from per-vertex doubled values (partition and total
/// are derived). Values outside {0,1,2} are kept so verification can flag them.
HalfIntegralSolution make_half_integral(std::vector<std::uint8_t> doubled);

/// Empty iff `sol` is feasible, partitions V(g) consistently with its values,
/// keeps N(V0) ⊆ V1, and reports doubled_value = 2|V1| + |V1/2|.
std::vector<std::string> verify_half_integral(const Graph& g, const HalfIntegralSolution& sol);

}  // namespace pvc

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc::oracle {

/// Thrown when an instance exceeds the enumeration budget.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Verdict {
  bool yes = false;
  std::optional<std::vector<VertexId>> witness;  // present iff yes
};

/// Exact Partial Vertex Cover by enumerating every set of at most k
/// positive-degree vertices, smallest size first and lexicographically within
/// a size. The first hit is returned as witness.
Verdict solve_pvc_exact(const Graph& g, std::int64_t k, std::int64_t l,
                        std::uint64_t max_subsets = 50'000'000);

/// min 2·Σx_v over all x ∈ {0, 1/2, 1}^V with x_u + x_v >= 1 on every edge.
std::uint64_t brute_lp_opt(const Graph& g, std::size_t max_vertices = 12);

/// min over X ⊆ A containing `a` (host id) of |N(X)| - |X|.
std::int64_t brute_min_surplus(const BipartiteView& h, VertexId a, std::size_t max_a = 12);

}  // namespace pvc::oracle

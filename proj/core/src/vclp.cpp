#include "pvc/vclp.hpp"

#include "pvc/matching.hpp"

namespace pvc {

HalfIntegralSolution make_half_integral(std::vector<std::uint8_t> doubled) {
  HalfIntegralSolution sol;
  sol.doubled = std::move(doubled);
  for (VertexId v = 0; v < sol.doubled.size(); ++v) {
    switch (sol.doubled[v]) {
      case 0: sol.v0.push_back(v); break;
      case 1: sol.vhalf.push_back(v); break;
      case 2: sol.v1.push_back(v); break;
      default: break;
    }
    sol.doubled_value += sol.doubled[v];
  }
  return sol;
}

HalfIntegralSolution solve_vclp(const Graph& g) {
  const std::size_t n = g.num_vertices();
  // Left copy v_L is adjacent to u_R for every u in N(v); lists stay ascending.
  BipartiteAdjacency adj(n);
  for (VertexId v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  const auto matching = hopcroft_karp(adj, n);
  const auto cover = konig_cover(adj, matching);

  std::vector<std::uint8_t> doubled(n);
  for (std::size_t v = 0; v < n; ++v) {
    doubled[v] = static_cast<std::uint8_t>(cover.left[v]) + static_cast<std::uint8_t>(cover.right[v]);
  }
  auto sol = make_half_integral(std::move(doubled));
  if (sol.doubled_value != matching.size) {
    throw std::logic_error("solve_vclp: cover size differs from matching size");
  }
  return sol;
}

std::vector<std::string> verify_half_integral(const Graph& g, const HalfIntegralSolution& sol) {
  std::vector<std::string> issues;
  const std::size_t n = g.num_vertices();
  if (sol.doubled.size() != n) {
    issues.push_back("solution has " + std::to_string(sol.doubled.size()) + " values for " +
                     std::to_string(n) + " vertices");
    return issues;
  }
  std::uint64_t total = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (sol.doubled[v] > 2) issues.push_back("vertex " + std::to_string(v) + ": value not in {0, 1/2, 1}");
    total += sol.doubled[v];
  }
  for (auto [u, v] : g.edges()) {
    if (sol.doubled[u] + sol.doubled[v] < 2) {
      issues.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + ": x_u + x_v < 1");
    }
  }

  std::vector<int> seen(n, 0);
  auto check_block = [&](const std::vector<VertexId>& block, std::uint8_t value, const char* name) {
    for (auto v : block) {
      if (v >= n) {
        issues.push_back(std::string(name) + " contains unknown vertex " + std::to_string(v));
        continue;
      }
      ++seen[v];
      if (sol.doubled[v] != value) {
        issues.push_back("vertex " + std::to_string(v) + " listed in " + name + " with mismatching value");
      }
    }
  };
  check_block(sol.v0, 0, "V0");
  check_block(sol.vhalf, 1, "V1/2");
  check_block(sol.v1, 2, "V1");
  for (VertexId v = 0; v < n; ++v) {
    if (seen[v] != 1) {
      issues.push_back("vertex " + std::to_string(v) + " appears in " + std::to_string(seen[v]) +
                       " partition blocks");
    }
  }
  for (auto v : sol.v0) {
    if (v >= n) continue;
    for (auto w : g.neighbors(v)) {
      if (sol.doubled[w] != 2) {
        issues.push_back("vertex " + std::to_string(v) + " in V0 has neighbor " + std::to_string(w) +
                         " outside V1");
      }
    }
  }
  const auto expected = 2 * sol.v1.size() + sol.vhalf.size();
  if (sol.doubled_value != total || sol.doubled_value != expected) {
    issues.push_back("doubled_value " + std::to_string(sol.doubled_value) + " inconsistent with values");
  }
  return issues;
}

}  // namespace pvc

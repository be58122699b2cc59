#include "pvc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace pvc::oracle {

namespace {

std::uint64_t binomial_sum(std::size_t n, std::size_t k, std::uint64_t cap) {
  // Σ_{i<=k} C(n, i), saturating at cap.
  std::uint64_t total = 0;
  std::uint64_t c = 1;
  for (std::size_t i = 0; i <= std::min(k, n); ++i) {
    total += c;
    if (total > cap) return cap + 1;
    c = c * (n - i) / (i + 1);
    if (c > cap) c = cap + 1;
  }
  return total;
}

}  // namespace

Verdict solve_pvc_exact(const Graph& g, std::int64_t k, std::int64_t l, std::uint64_t max_subsets) {
  if (k < 0 || l < 0) throw std::invalid_argument("solve_pvc_exact: k and l must be non-negative");
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) candidates.push_back(v);
  }
  const auto budget = static_cast<std::size_t>(std::min<std::int64_t>(k, static_cast<std::int64_t>(candidates.size())));
  if (binomial_sum(candidates.size(), budget, max_subsets) > max_subsets) {
    throw TooLarge("solve_pvc_exact: more than " + std::to_string(max_subsets) + " candidate subsets");
  }

  const auto m = static_cast<std::int64_t>(g.num_edges());
  std::vector<bool> removed(g.num_vertices(), false);
  std::vector<std::size_t> pick;
  for (std::size_t size = 0; size <= budget; ++size) {
    // Lexicographic enumeration of size-subsets of candidate positions.
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      std::int64_t covered = 0;
      for (auto p : pick) {
        const auto v = candidates[p];
        for (auto w : g.neighbors(v)) covered += removed[w] ? 0 : 1;
        removed[v] = true;
      }
      for (auto p : pick) removed[candidates[p]] = false;
      if (m - covered <= l) {
        std::vector<VertexId> witness;
        for (auto p : pick) witness.push_back(candidates[p]);
        return {true, std::move(witness)};
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == candidates.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {false, std::nullopt};
}

std::uint64_t brute_lp_opt(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.num_vertices();
  if (n > max_vertices) {
    throw TooLarge("brute_lp_opt: " + std::to_string(n) + " vertices exceeds " + std::to_string(max_vertices));
  }
  // Odometer over {0,1,2}^n; every edge constraint is checked on each assignment.
  const auto edges = g.edges();
  std::vector<std::uint8_t> x(n, 0);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (;;) {
    bool feasible = true;
    for (auto [u, v] : edges) {
      if (x[u] + x[v] < 2) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      std::uint64_t total = 0;
      for (auto xv : x) total += xv;
      best = std::min(best, total);
    }
    std::size_t i = 0;
    while (i < n && x[i] == 2) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
  return best;
}

std::int64_t brute_min_surplus(const BipartiteView& h, VertexId a, std::size_t max_a) {
  const auto anchor = h.a_position(a);
  if (anchor == kNoVertex) throw std::invalid_argument("brute_min_surplus: vertex not in A");
  const auto na = h.size_a();
  if (na > max_a) throw TooLarge("brute_min_surplus: |A| exceeds " + std::to_string(max_a));

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<bool> hit(h.size_b());
  for (std::uint32_t mask = 0; mask < (1u << na); ++mask) {
    if (!((mask >> anchor) & 1u)) continue;
    std::fill(hit.begin(), hit.end(), false);
    std::int64_t size = 0, neighbors = 0;
    for (std::size_t i = 0; i < na; ++i) {
      if (!((mask >> i) & 1u)) continue;
      ++size;
      for (auto j : h.a_neighbors(i)) {
        if (!hit[j]) {
          hit[j] = true;
          ++neighbors;
        }
      }
    }
    best = std::min(best, neighbors - size);
  }
  return best;
}

}  // namespace pvc::oracle

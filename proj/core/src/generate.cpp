#include "pvc/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pvc::gen {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const auto x = next();
    if (x >= threshold) return x % bound;
  }
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const auto pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > pairs) throw std::invalid_argument("random_gnm: more edges than vertex pairs");
  Rng rng(seed);
  std::set<Edge> chosen;
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    auto u = static_cast<VertexId>(rng.below(n));
    auto v = static_cast<VertexId>(rng.below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (chosen.insert({u, v}).second) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

PlantedInstance planted(std::size_t n, std::size_t k, std::size_t l, std::uint64_t seed, double p) {
  check_probability(p);
  if (k > n) throw std::invalid_argument("planted: k exceeds n");
  const auto rest = n - k;
  const auto rest_pairs = rest < 2 ? 0 : rest * (rest - 1) / 2;
  if (l > rest_pairs) throw std::invalid_argument("planted: l exceeds the pairs outside the solution");

  Rng rng(seed);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + rng.below(n - i);
    std::swap(order[i], order[j]);
  }
  PlantedInstance out;
  out.solution.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(out.solution.begin(), out.solution.end());

  std::vector<bool> in_s(n, false);
  for (auto v : out.solution) in_s[v] = true;

  std::vector<Edge> outside;
  for (VertexId u = 0; u < n; ++u) {
    if (in_s[u]) continue;
    for (VertexId v = u + 1; v < n; ++v) {
      if (!in_s[v]) outside.emplace_back(u, v);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < l; ++i) {
    const auto j = i + rng.below(outside.size() - i);
    std::swap(outside[i], outside[j]);
    edges.push_back(outside[i]);
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if ((in_s[u] || in_s[v]) && rng.uniform01() < p) edges.emplace_back(u, v);
    }
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

}  // namespace pvc::gen

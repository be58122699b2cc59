#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc::gen {

/// Seeded source used by every generator: std::mt19937_64 with two fixed
/// reductions so other implementations can reproduce instances bit for bit.
///   uniform01():  (x >> 11) * 2^-53
///   below(b):     reject x < (2^64 - b) mod b, then x mod b
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// G(n, p): pairs (u, v), u < v, visited in lexicographic order; each is an
/// edge iff uniform01() < p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// G(n, m): m distinct edges drawn as (below(n), below(n)) pairs, skipping
/// loops and repeats.
Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

struct PlantedInstance {
  Graph graph;
  std::vector<VertexId> solution;  // |solution| = k and G - solution has exactly l edges
};

/// Yes-instance with a planted solution S: S is the first k entries of a
/// Fisher-Yates shuffle; exactly l edges are chosen among V \ S; then each
/// pair touching S becomes an edge with probability p.
PlantedInstance planted(std::size_t n, std::size_t k, std::size_t l, std::uint64_t seed, double p = 0.5);

}  // namespace pvc::gen

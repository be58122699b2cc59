#include <doctest.h>

#include <limits>

#include "pvc/generate.hpp"
#include "pvc/matching.hpp"
#include "pvc/max_flow.hpp"

using namespace pvc;

namespace {

struct ArcSpec {
  std::uint32_t from, to;
  std::int64_t cap;
};

// Minimum s-t cut by enumerating every source side.
std::int64_t brute_min_cut(std::size_t n, const std::vector<ArcSpec>& arcs, std::uint32_t s, std::uint32_t t) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!((mask >> s) & 1u) || ((mask >> t) & 1u)) continue;
    std::int64_t cut = 0;
    for (const auto& a : arcs) {
      if (((mask >> a.from) & 1u) && !((mask >> a.to) & 1u)) cut += a.cap;
    }
    best = std::min(best, cut);
  }
  return best;
}

// Maximum matching by enumerating edge subsets.
std::size_t brute_matching(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges, std::size_t nl,
                           std::size_t nr) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<bool> ul(nl), ur(nr);
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      if (!((mask >> e) & 1u)) continue;
      auto [l, r] = edges[e];
      if (ul[l] || ur[r]) ok = false;
      ul[l] = ur[r] = true;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

}  // namespace

TEST_CASE("max_flow on a textbook network") {
  FlowNetwork net(4);
  net.add_arc(0, 1, 3);
  net.add_arc(0, 2, 2);
  net.add_arc(1, 2, 1);
  net.add_arc(1, 3, 2);
  net.add_arc(2, 3, 3);
  CHECK(net.max_flow(0, 3) == 5);
  const auto side = net.residual_reachable(0);
  CHECK(side[0]);
  CHECK_FALSE(side[3]);
}

TEST_CASE("max_flow equals brute-force min cut") {
  gen::Rng rng(7);
  for (int round = 0; round < 300; ++round) {
    const auto n = 2 + static_cast<std::size_t>(rng.below(7));
    std::vector<ArcSpec> arcs;
    const auto count = rng.below(3 * n);
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto u = static_cast<std::uint32_t>(rng.below(n));
      const auto v = static_cast<std::uint32_t>(rng.below(n));
      if (u != v) arcs.push_back({u, v, static_cast<std::int64_t>(rng.below(5))});
    }
    FlowNetwork net(n);
    for (const auto& a : arcs) net.add_arc(a.from, a.to, a.cap);
    const auto t = static_cast<std::uint32_t>(n - 1);
    const auto flow = net.max_flow(0, t);
    CHECK(flow == brute_min_cut(n, arcs, 0, t));

    // The residual-reachable side is a minimum cut.
    const auto side = net.residual_reachable(0);
    std::int64_t cut = 0;
    for (const auto& a : arcs)
      if (side[a.from] && !side[a.to]) cut += a.cap;
    CHECK(cut == flow);
  }
}

TEST_CASE("hopcroft_karp and konig_cover against brute force") {
  gen::Rng rng(11);
  for (int round = 0; round < 300; ++round) {
    const auto nl = static_cast<std::size_t>(rng.below(6));
    const auto nr = static_cast<std::size_t>(rng.below(6));
    BipartiteAdjacency adj(nl);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t l = 0; l < nl; ++l)
      for (std::uint32_t r = 0; r < nr; ++r)
        if (rng.below(3) == 0 && edges.size() < 14) {
          adj[l].push_back(r);
          edges.emplace_back(l, r);
        }
    const auto m = hopcroft_karp(adj, nr);
    CHECK(m.size == brute_matching(edges, nl, nr));

    std::size_t matched = 0;
    for (std::uint32_t l = 0; l < nl; ++l) {
      if (m.mate_left[l] == kUnmatched) continue;
      ++matched;
      CHECK(m.mate_right[m.mate_left[l]] == l);
      CHECK(std::find(adj[l].begin(), adj[l].end(), m.mate_left[l]) != adj[l].end());
    }
    CHECK(matched == m.size);

    const auto cover = konig_cover(adj, m);
    std::size_t cover_size = 0;
    for (bool b : cover.left) cover_size += b;
    for (bool b : cover.right) cover_size += b;
    CHECK(cover_size == m.size);
    for (auto [l, r] : edges) CHECK((cover.left[l] || cover.right[r]));
  }
}

TEST_CASE("hopcroft_karp is deterministic") {
  BipartiteAdjacency adj{{0, 1}, {0}, {1, 2}};
  const auto a = hopcroft_karp(adj, 3);
  const auto b = hopcroft_karp(adj, 3);
  CHECK(a.size == 3);
  CHECK(a.mate_left == b.mate_left);
}

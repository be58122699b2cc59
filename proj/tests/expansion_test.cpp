#include <doctest.h>

#include "pvc/expansion.hpp"
#include "pvc/oracle.hpp"
#include "test_util.hpp"

using namespace pvc;
using namespace pvc::test;

namespace {

BipartiteView view_of(const Graph& g, std::size_t na) {
  return bipartite_view(g, range(0, static_cast<VertexId>(na)),
                        range(static_cast<VertexId>(na), static_cast<VertexId>(g.num_vertices())));
}

// a = 0, b1 = 1, b2 = 2
Graph single_a_two_b() { return Graph::from_edges(3, std::vector<Edge>{{0, 1}, {0, 2}}); }

// a1 = 0, a2 = 1, b1 = 2, b2 = 3, ...; a1 sees every b, a2 only b1.
Graph hub_and_pendant(std::size_t nb) {
  std::vector<Edge> edges{{1, 2}};
  for (VertexId b = 0; b < nb; ++b) edges.emplace_back(0, static_cast<VertexId>(2 + b));
  return Graph::from_edges(2 + nb, edges);
}

// a1 = 0, a2 = 1, shared neighbor b1 = 2.
Graph shared_neighbor() { return Graph::from_edges(3, std::vector<Edge>{{0, 2}, {1, 2}}); }

// |N(X)| - |X| over every subset of A, straight from the host graph.
std::vector<std::pair<std::uint32_t, std::int64_t>> all_surpluses(const BipartiteView& h) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << h.size_a()); ++mask) {
    std::vector<bool> hit(h.size_b(), false);
    std::int64_t nbrs = 0, size = 0;
    for (std::size_t i = 0; i < h.size_a(); ++i) {
      if (!((mask >> i) & 1u)) continue;
      ++size;
      for (auto j : h.a_neighbors(i)) {
        if (!hit[j]) ++nbrs;
        hit[j] = true;
      }
    }
    out.emplace_back(mask, nbrs - size);
  }
  return out;
}

std::int64_t surplus_of(const BipartiteView& h, const std::vector<VertexId>& z) {
  std::vector<bool> hit(h.size_b(), false);
  std::int64_t nbrs = 0;
  for (auto v : z)
    for (auto j : h.a_neighbors(h.a_position(v))) {
      if (!hit[j]) ++nbrs;
      hit[j] = true;
    }
  return nbrs - static_cast<std::int64_t>(z.size());
}

bool no_isolated_b(const BipartiteView& h) {
  for (std::size_t j = 0; j < h.size_b(); ++j)
    if (h.b_neighbors(j).empty()) return false;
  return true;
}

}  // namespace

TEST_CASE("find_q_expansion: single vertex with two private neighbors") {
  const auto g = single_a_two_b();
  const auto h = view_of(g, 1);
  const auto cert = find_q_expansion(h, 2);
  CHECK(cert.x_set == std::vector<VertexId>{0});
  CHECK(cert.y_set == std::vector<VertexId>{1, 2});
  CHECK(cert.m_edges == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(verify_expansion(h, cert));
}

TEST_CASE("find_q_expansion peels the deficient pendant first") {
  const auto g = hub_and_pendant(4);
  const auto h = view_of(g, 2);

  const auto z = find_expansion_violator(h, 2);
  REQUIRE(z);
  CHECK(z->z_set == std::vector<VertexId>{1});
  CHECK(z->surplus == 0);  // |N(Z)| = 1 < 2|Z|

  const auto cert = find_q_expansion(h, 2);
  CHECK(cert.x_set == std::vector<VertexId>{0});
  CHECK(cert.y_set == std::vector<VertexId>{3, 4, 5});
  CHECK(cert.m_edges.size() == 2);
  CHECK(verify_expansion(h, cert));
  for (auto y : cert.y_set)
    for (auto w : g.neighbors(y)) CHECK(std::find(cert.x_set.begin(), cert.x_set.end(), w) != cert.x_set.end());
}

TEST_CASE("find_q_expansion on the seven-vertex example is a perfect crown") {
  const auto g = seven_vertex();
  const auto h = bipartite_view(g, range(4, 7), range(0, 4));
  const auto cert = find_q_expansion(h, 1);
  CHECK(cert.x_set == range(4, 7));
  CHECK(cert.y_set == range(0, 4));
  CHECK(cert.m_edges.size() == 3);
  CHECK(verify_expansion(h, cert));
}

TEST_CASE("find_q_expansion rejects bad preconditions") {
  const auto g = single_a_two_b();
  CHECK_THROWS_AS(find_q_expansion(view_of(g, 1), 3), std::invalid_argument);
  CHECK_THROWS_AS(find_q_expansion(view_of(g, 1), 0), std::invalid_argument);
  CHECK_THROWS_AS(find_q_expansion(bipartite_view(g, {}, range(1, 3)), 1), std::invalid_argument);
  const auto with_isolated = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
  CHECK_THROWS_AS(find_q_expansion(view_of(with_isolated, 1), 1), std::invalid_argument);
}

TEST_CASE("min_surplus_containing examples") {
  SUBCASE("single candidate set") {
    const auto h = view_of(single_a_two_b(), 1);
    const auto d = min_surplus_containing(h, 0);
    CHECK(d.z_set == std::vector<VertexId>{0});
    CHECK(d.surplus == 1);
    CHECK(oracle::brute_min_surplus(h, 0) == 1);
  }
  SUBCASE("shared neighbor") {
    const auto h = view_of(shared_neighbor(), 2);
    // Brute force: {a1} -> 0, {a1, a2} -> -1.
    const auto d = min_surplus_containing(h, 0);
    CHECK(d.z_set == std::vector<VertexId>{0, 1});
    CHECK(d.surplus == -1);
    CHECK(oracle::brute_min_surplus(h, 0) == -1);
  }
  SUBCASE("K_{3,5}") {
    const auto h = view_of(complete_bipartite(3, 5), 3);
    for (VertexId a = 0; a < 3; ++a) {
      const auto d = min_surplus_containing(h, a);
      CHECK(d.surplus == 2);
      CHECK(d.z_set == range(0, 3));
      CHECK(oracle::brute_min_surplus(h, a) == 2);
    }
  }
  SUBCASE("vertex outside A") {
    const auto h = view_of(single_a_two_b(), 1);
    CHECK_THROWS_AS(min_surplus_containing(h, 1), std::invalid_argument);
  }
  SUBCASE("many A-vertices without neighbors") {
    // The isolated A-vertices join X for free.
    const auto g = Graph::from_edges(6, std::vector<Edge>{{0, 5}});
    const auto h = view_of(g, 5);
    const auto d = min_surplus_containing(h, 0);
    CHECK(d.surplus == oracle::brute_min_surplus(h, 0));
    CHECK(d.surplus == -4);
  }
}

TEST_CASE("find_additive_violator examples") {
  const auto h = view_of(single_a_two_b(), 1);
  const auto hit = find_additive_violator(h, 2);
  REQUIRE(hit);
  CHECK(hit->z_set == std::vector<VertexId>{0});
  CHECK(hit->surplus == 1);
  CHECK_FALSE(find_additive_violator(h, 1));

  const auto shared = view_of(shared_neighbor(), 2);
  const auto v = find_additive_violator(shared, 1);
  REQUIRE(v);
  CHECK(v->z_set == std::vector<VertexId>{0, 1});
  CHECK(v->surplus == -1);
}

TEST_CASE("find_q_additive_expansion examples") {
  SUBCASE("single vertex") {
    const auto h = view_of(single_a_two_b(), 1);
    const auto cert = find_q_additive_expansion(h, 1);
    CHECK(cert.x_set == std::vector<VertexId>{0});
    CHECK(cert.y_set == std::vector<VertexId>{1, 2});
    CHECK(verify_additive_expansion(h, cert));
  }
  SUBCASE("pendant violator is removed with its neighbor") {
    const auto g = hub_and_pendant(3);
    const auto h = view_of(g, 2);
    const auto cert = find_q_additive_expansion(h, 1);
    CHECK(cert.x_set == std::vector<VertexId>{0});
    CHECK(cert.y_set == std::vector<VertexId>{3, 4});
    CHECK(verify_additive_expansion(h, cert));
  }
  SUBCASE("K_{2,3} is already a 1-additive expansion") {
    const auto h = view_of(complete_bipartite(2, 3), 2);
    const auto cert = find_q_additive_expansion(h, 1);
    CHECK(cert.x_set == range(0, 2));
    CHECK(cert.y_set == range(2, 5));
  }
  SUBCASE("preconditions") {
    const auto h = view_of(single_a_two_b(), 1);
    CHECK_THROWS_AS(find_q_additive_expansion(h, 2), std::invalid_argument);
    CHECK_THROWS_AS(find_q_additive_expansion(h, 0), std::invalid_argument);
  }
}

TEST_CASE("verifiers reject broken certificates") {
  const auto g = hub_and_pendant(4);
  const auto h = view_of(g, 2);

  ExpansionCertificate twice{1, {0, 1}, {2, 3}, {{0, 2}, {1, 2}}};
  const auto r = verify_expansion(h, twice);
  CHECK_FALSE(r);
  CHECK_FALSE(r.reason.empty());

  ExpansionCertificate leaky{1, {0}, {2, 3}, {{0, 2}}};  // b1 also sees a2
  CHECK_FALSE(verify_expansion(h, leaky));

  ExpansionCertificate non_edge{1, {1}, {3}, {{1, 3}}};
  CHECK_FALSE(verify_expansion(h, non_edge));

  ExpansionCertificate short_q{2, {0}, {3, 4, 5}, {{0, 3}}};
  CHECK_FALSE(verify_expansion(h, short_q));

  CHECK_FALSE(verify_expansion(h, ExpansionCertificate{1, {}, {3}, {}}));
  CHECK_FALSE(verify_additive_expansion(h, AdditiveExpansionCertificate{1, {0, 1}, {2, 3, 4, 5}}));
  // N(Y) ⊆ X holds but {a2} has a single neighbor.
  CHECK_FALSE(verify_additive_expansion(h, AdditiveExpansionCertificate{2, {0, 1}, {2, 3, 4, 5}}));
  CHECK(verify_additive_expansion(h, AdditiveExpansionCertificate{1, {0}, {3, 4, 5}}));
  CHECK(verify_additive_expansion(h, AdditiveExpansionCertificate{2, {0}, {3, 4, 5}}));
  CHECK_FALSE(verify_additive_expansion(h, AdditiveExpansionCertificate{3, {0}, {3, 4, 5}}));
}

TEST_CASE("surplus minimization matches brute force on random views") {
  gen::Rng rng(31337);
  for (int round = 0; round < 200; ++round) {
    const auto lv = random_lemma_view(rng, 1, false, 9);
    const auto& h = lv.view;
    const auto table = all_surpluses(h);
    for (auto a : h.side_a()) {
      const auto d = min_surplus_containing(h, a);
      CHECK(d.surplus == oracle::brute_min_surplus(h, a));
      CHECK(std::find(d.z_set.begin(), d.z_set.end(), a) != d.z_set.end());
      CHECK(surplus_of(h, d.z_set) == d.surplus);
    }
    for (std::uint32_t q = 1; q <= 3; ++q) {
      bool any_violation = false;
      for (auto [mask, s] : table) any_violation |= s < static_cast<std::int64_t>(q);
      const auto v = find_additive_violator(h, q);
      CHECK(v.has_value() == any_violation);
      if (v) CHECK(surplus_of(h, v->z_set) < static_cast<std::int64_t>(q));
    }
  }
}

TEST_CASE("lemma loops shrink A and keep their preconditions") {
  gen::Rng rng(4242);
  for (int round = 0; round < 200; ++round) {
    const auto q = static_cast<std::uint32_t>(1 + rng.below(3));

    auto mult = random_lemma_view(rng, q, false, 8);
    for (auto h = mult.view; auto z = find_expansion_violator(h, q);) {
      CHECK(surplus_of(h, z->z_set) + static_cast<std::int64_t>(z->z_set.size()) <
            static_cast<std::int64_t>(q * z->z_set.size()));
      const auto before = h.size_a();
      h = remove_with_neighbors(h, z->z_set);
      CHECK(h.size_a() < before);
      CHECK(h.size_a() > 0);
      CHECK(h.size_b() >= q * h.size_a());
      CHECK(no_isolated_b(h));
    }

    auto add = random_lemma_view(rng, q, true, 8);
    for (auto h = add.view; auto z = find_additive_violator(h, q);) {
      const auto before = h.size_a();
      h = remove_with_neighbors(h, z->z_set);
      CHECK(h.size_a() < before);
      CHECK(h.size_a() > 0);
      CHECK(h.size_b() > q * h.size_a());
      CHECK(no_isolated_b(h));
    }
  }
}

TEST_CASE("finders return verified certificates") {
  gen::Rng rng(8);
  for (int round = 0; round < 200; ++round) {
    const auto q = static_cast<std::uint32_t>(1 + rng.below(3));
    const auto mult = random_lemma_view(rng, q, false, 10);
    const auto cert = find_q_expansion(mult.view, q);
    const auto ok = verify_expansion(mult.view, cert);
    CHECK_MESSAGE(ok, ok.reason);
    if (q >= 2) {
      const AdditiveExpansionCertificate as_additive{q - 1, cert.x_set, cert.y_set};
      CHECK(verify_additive_expansion(mult.view, as_additive));
    }

    const auto add = random_lemma_view(rng, q, true, 10);
    const auto acert = find_q_additive_expansion(add.view, q);
    const auto aok = verify_additive_expansion(add.view, acert);
    CHECK_MESSAGE(aok, aok.reason);
  }
}

TEST_CASE("additive verifier exact path for large X") {
  // K_{14,20}: every subset has surplus >= 20 - 14 = 6.
  const auto h = view_of(complete_bipartite(14, 20), 14);
  CHECK(verify_additive_expansion(h, {6, range(0, 14), range(14, 34)}));
  CHECK_FALSE(verify_additive_expansion(h, {7, range(0, 14), range(14, 34)}));
}

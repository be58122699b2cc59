#include "pvc/expansion.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>

#include "pvc/matching.hpp"
#include "pvc/max_flow.hpp"

namespace pvc {

namespace {

using Capacity = FlowNetwork::Capacity;

void require_positive(std::uint32_t q, const char* who) {
  if (q == 0) throw std::invalid_argument(std::string(who) + ": q must be positive");
}

void require_lemma_shape(const BipartiteView& h, const char* who) {
  if (h.size_a() == 0) throw std::invalid_argument(std::string(who) + ": side A is empty");
  for (std::size_t j = 0; j < h.size_b(); ++j) {
    if (h.b_neighbors(j).empty()) {
      throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(h.b_vertex(j)) +
                                  " is isolated in B");
    }
  }
}

/// Removes Z (A-positions) and N(Z) from the view.
BipartiteView peel(const BipartiteView& h, const std::vector<std::uint32_t>& z) {
  std::vector<bool> keep_a(h.size_a(), true), keep_b(h.size_b(), true);
  for (auto i : z) {
    keep_a[i] = false;
    for (auto j : h.a_neighbors(i)) keep_b[j] = false;
  }
  return h.restrict_to(keep_a, keep_b);
}

struct ExpansionRound {
  std::optional<ExpansionCertificate> certificate;
  std::vector<std::uint32_t> deficient;  // A-positions, when no certificate
};

/// s->a (cap q), a->b (unbounded), b->t (cap 1). Cutting every b->t arc
/// costs at most the edge count, so edges + 1 is never part of a minimum cut.
ExpansionRound expansion_round(const BipartiteView& cur, std::uint32_t q) {
  const auto na = cur.size_a();
  const auto nb = cur.size_b();
  const FlowNetwork::Node source = 0;
  const auto sink = static_cast<FlowNetwork::Node>(na + nb + 1);
  const auto unbounded = static_cast<Capacity>(cur.num_edges() + 1);

  FlowNetwork net(na + nb + 2);
  for (std::size_t i = 0; i < na; ++i) net.add_arc(source, static_cast<FlowNetwork::Node>(1 + i), q);
  std::vector<std::vector<std::size_t>> arc_of(na);
  for (std::size_t i = 0; i < na; ++i) {
    for (auto j : cur.a_neighbors(i)) {
      arc_of[i].push_back(net.add_arc(static_cast<FlowNetwork::Node>(1 + i),
                                      static_cast<FlowNetwork::Node>(1 + na + j), unbounded));
    }
  }
  for (std::size_t j = 0; j < nb; ++j) net.add_arc(static_cast<FlowNetwork::Node>(1 + na + j), sink, 1);

  ExpansionRound round;
  const auto flow = net.max_flow(source, sink);
  if (flow == static_cast<Capacity>(q) * static_cast<Capacity>(na)) {
    ExpansionCertificate cert;
    cert.q = q;
    cert.x_set.assign(cur.side_a().begin(), cur.side_a().end());
    cert.y_set.assign(cur.side_b().begin(), cur.side_b().end());
    for (std::size_t i = 0; i < na; ++i) {
      const auto nb_i = cur.a_neighbors(i);
      for (std::size_t e = 0; e < nb_i.size(); ++e) {
        if (net.flow(arc_of[i][e]) > 0) cert.m_edges.emplace_back(cur.a_vertex(i), cur.b_vertex(nb_i[e]));
      }
    }
    round.certificate = std::move(cert);
    return round;
  }
  const auto reach = net.residual_reachable(source);
  for (std::size_t i = 0; i < na; ++i) {
    if (reach[1 + i]) round.deficient.push_back(static_cast<std::uint32_t>(i));
  }
  if (round.deficient.empty()) throw std::logic_error("expansion round: minimum cut has no A-vertex on the source side");
  return round;
}

}  // namespace

ExpansionCertificate find_q_expansion(const BipartiteView& h, std::uint32_t q) {
  require_positive(q, "find_q_expansion");
  require_lemma_shape(h, "find_q_expansion");
  if (h.size_b() < static_cast<std::size_t>(q) * h.size_a()) {
    throw std::invalid_argument("find_q_expansion: requires |B| >= q|A|");
  }

  BipartiteView cur = h;
  for (;;) {
    auto round = expansion_round(cur, q);
    if (round.certificate) return std::move(*round.certificate);
    if (round.deficient.size() == cur.size_a()) {
      throw std::logic_error("find_q_expansion: deficient set covers all of A");
    }
    cur = peel(cur, round.deficient);
  }
}

std::optional<DeficientSet> find_expansion_violator(const BipartiteView& h, std::uint32_t q) {
  require_positive(q, "find_expansion_violator");
  if (h.size_a() == 0) return std::nullopt;
  auto round = expansion_round(h, q);
  if (round.certificate) return std::nullopt;
  DeficientSet out;
  std::vector<bool> hit(h.size_b(), false);
  std::int64_t neighbors = 0;
  for (auto i : round.deficient) {
    out.z_set.push_back(h.a_vertex(i));
    for (auto j : h.a_neighbors(i)) {
      if (!hit[j]) {
        hit[j] = true;
        ++neighbors;
      }
    }
  }
  out.surplus = neighbors - static_cast<std::int64_t>(out.z_set.size());
  return out;
}

BipartiteView remove_with_neighbors(const BipartiteView& h, const std::vector<VertexId>& z) {
  std::vector<std::uint32_t> pos;
  for (auto v : z) {
    const auto p = h.a_position(v);
    if (p == kNoVertex) throw std::invalid_argument("remove_with_neighbors: vertex " + std::to_string(v) + " is not in A");
    pos.push_back(p);
  }
  return peel(h, pos);
}

DeficientSet min_surplus_containing(const BipartiteView& h, VertexId a) {
  const auto anchor = h.a_position(a);
  if (anchor == kNoVertex) {
    throw std::invalid_argument("min_surplus_containing: vertex " + std::to_string(a) + " is not in A");
  }
  const auto na = h.size_a();
  const auto nb = h.size_b();
  const FlowNetwork::Node source = 0;
  const auto sink = static_cast<FlowNetwork::Node>(na + nb + 1);
  const auto unbounded = static_cast<Capacity>(h.num_edges() + 1);

  FlowNetwork net(na + nb + 2);
  for (std::size_t i = 0; i < na; ++i) {
    net.add_arc(source, static_cast<FlowNetwork::Node>(1 + i), i == anchor ? unbounded : 1);
  }
  for (std::size_t i = 0; i < na; ++i) {
    for (auto j : h.a_neighbors(i)) {
      net.add_arc(static_cast<FlowNetwork::Node>(1 + i), static_cast<FlowNetwork::Node>(1 + na + j),
                  unbounded);
    }
  }
  for (std::size_t j = 0; j < nb; ++j) net.add_arc(static_cast<FlowNetwork::Node>(1 + na + j), sink, 1);

  const auto cut = net.max_flow(source, sink);
  const auto reach = net.residual_reachable(source);
  DeficientSet out;
  for (std::size_t i = 0; i < na; ++i) {
    if (reach[1 + i]) out.z_set.push_back(h.a_vertex(i));
  }
  out.surplus = cut - static_cast<std::int64_t>(na);
  return out;
}

std::optional<DeficientSet> find_additive_violator(const BipartiteView& h, std::uint32_t q) {
  require_positive(q, "find_additive_violator");
  for (auto a : h.side_a()) {
    auto candidate = min_surplus_containing(h, a);
    if (candidate.surplus < static_cast<std::int64_t>(q)) return candidate;
  }
  return std::nullopt;
}

AdditiveExpansionCertificate find_q_additive_expansion(const BipartiteView& h, std::uint32_t q) {
  require_positive(q, "find_q_additive_expansion");
  require_lemma_shape(h, "find_q_additive_expansion");
  if (h.size_b() <= static_cast<std::size_t>(q) * h.size_a()) {
    throw std::invalid_argument("find_q_additive_expansion: requires |B| > q|A|");
  }

  BipartiteView cur = h;
  while (auto violator = find_additive_violator(cur, q)) {
    if (violator->z_set.size() >= cur.size_a()) {
      throw std::logic_error("find_q_additive_expansion: violator covers all of A");
    }
    std::vector<std::uint32_t> z;
    z.reserve(violator->z_set.size());
    for (auto v : violator->z_set) z.push_back(cur.a_position(v));
    cur = peel(cur, z);
  }
  AdditiveExpansionCertificate cert;
  cert.q = q;
  cert.x_set.assign(cur.side_a().begin(), cur.side_a().end());
  cert.y_set.assign(cur.side_b().begin(), cur.side_b().end());
  return cert;
}

namespace {

struct LocalSides {
  std::vector<std::uint32_t> x_pos;  // positions in A
  std::vector<std::uint32_t> y_pos;  // positions in B
  std::vector<std::uint32_t> y_index_of_b;  // B position -> index in y_pos, or kNoVertex
};

/// Maps certificate sets to view positions; reports unknown or repeated ids.
std::optional<std::string> locate(const BipartiteView& h, const std::vector<VertexId>& xs,
                                  const std::vector<VertexId>& ys, LocalSides& out) {
  if (xs.empty()) return "X is empty";
  if (ys.empty()) return "Y is empty";
  std::vector<bool> seen_a(h.size_a(), false);
  for (auto v : xs) {
    const auto p = h.a_position(v);
    if (p == kNoVertex) return "vertex " + std::to_string(v) + " of X is not in A";
    if (seen_a[p]) return "vertex " + std::to_string(v) + " repeated in X";
    seen_a[p] = true;
    out.x_pos.push_back(p);
  }
  out.y_index_of_b.assign(h.size_b(), kNoVertex);
  for (auto v : ys) {
    const auto p = h.b_position(v);
    if (p == kNoVertex) return "vertex " + std::to_string(v) + " of Y is not in B";
    if (out.y_index_of_b[p] != kNoVertex) return "vertex " + std::to_string(v) + " repeated in Y";
    out.y_index_of_b[p] = static_cast<std::uint32_t>(out.y_pos.size());
    out.y_pos.push_back(p);
  }
  std::vector<bool> in_x(h.size_a(), false);
  for (auto p : out.x_pos) in_x[p] = true;
  for (auto p : out.y_pos) {
    for (auto i : h.b_neighbors(p)) {
      if (!in_x[i]) {
        return "vertex " + std::to_string(h.b_vertex(p)) + " of Y has neighbor " +
               std::to_string(h.a_vertex(i)) + " outside X";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

VerifyResult verify_expansion(const BipartiteView& h, const ExpansionCertificate& cert) {
  if (cert.q == 0) return VerifyResult::fail("q must be positive");
  LocalSides sides;
  if (auto err = locate(h, cert.x_set, cert.y_set, sides)) return VerifyResult::fail(*err);

  std::set<Edge> distinct;
  std::vector<std::uint32_t> x_load(h.size_a(), 0), y_load(h.size_b(), 0);
  std::vector<bool> in_x(h.size_a(), false);
  for (auto p : sides.x_pos) in_x[p] = true;
  for (auto [x, y] : cert.m_edges) {
    if (!distinct.insert({x, y}).second) {
      return VerifyResult::fail("edge " + std::to_string(x) + "-" + std::to_string(y) + " repeated in M");
    }
    const auto px = h.a_position(x);
    const auto py = h.b_position(y);
    if (px == kNoVertex || !in_x[px]) return VerifyResult::fail("M edge endpoint " + std::to_string(x) + " not in X");
    if (py == kNoVertex || sides.y_index_of_b[py] == kNoVertex) {
      return VerifyResult::fail("M edge endpoint " + std::to_string(y) + " not in Y");
    }
    auto nb = h.a_neighbors(px);
    if (!std::binary_search(nb.begin(), nb.end(), py)) {
      return VerifyResult::fail("M edge " + std::to_string(x) + "-" + std::to_string(y) + " is not in H");
    }
    ++x_load[px];
    ++y_load[py];
  }
  for (auto p : sides.x_pos) {
    if (x_load[p] != cert.q) {
      return VerifyResult::fail("vertex " + std::to_string(h.a_vertex(p)) + " of X has " +
                                std::to_string(x_load[p]) + " M edges, expected " + std::to_string(cert.q));
    }
  }
  for (auto p : sides.y_pos) {
    if (y_load[p] > 1) {
      return VerifyResult::fail("vertex " + std::to_string(h.b_vertex(p)) + " of Y has " +
                                std::to_string(y_load[p]) + " M edges");
    }
  }
  return {};
}

VerifyResult verify_additive_expansion(const BipartiteView& h, const AdditiveExpansionCertificate& cert,
                                       std::size_t sampled_subsets) {
  if (cert.q == 0) return VerifyResult::fail("q must be positive");
  LocalSides sides;
  if (auto err = locate(h, cert.x_set, cert.y_set, sides)) return VerifyResult::fail(*err);

  const std::size_t nx = sides.x_pos.size();
  const std::size_t ny = sides.y_pos.size();
  const std::size_t q = cert.q;
  if (ny < nx + q) {
    return VerifyResult::fail("|Y| = " + std::to_string(ny) + " < |X| + q = " + std::to_string(nx + q));
  }

  // H[X, Y] in local indices.
  BipartiteAdjacency xy(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    for (auto j : h.a_neighbors(sides.x_pos[i])) {
      if (sides.y_index_of_b[j] != kNoVertex) xy[i].push_back(sides.y_index_of_b[j]);
    }
  }

  // Definitional form: a matching saturating X survives deleting any q-subset B'.
  auto saturates_without = [&](const std::vector<bool>& removed) {
    BipartiteAdjacency adj(nx);
    for (std::size_t i = 0; i < nx; ++i) {
      for (auto j : xy[i]) {
        if (!removed[j]) adj[i].push_back(j);
      }
    }
    return hopcroft_karp(adj, ny).size == nx;
  };
  auto describe = [&](const std::vector<bool>& removed) {
    std::string s = "no matching saturating X after removing {";
    bool first = true;
    for (std::size_t j = 0; j < ny; ++j) {
      if (!removed[j]) continue;
      s += (first ? "" : ", ") + std::to_string(h.b_vertex(sides.y_pos[j]));
      first = false;
    }
    return s + "}";
  };

  if (ny <= 12) {
    for (std::uint32_t mask = 0; mask < (1u << ny); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != q) continue;
      std::vector<bool> removed(ny);
      for (std::size_t j = 0; j < ny; ++j) removed[j] = (mask >> j) & 1u;
      if (!saturates_without(removed)) return VerifyResult::fail(describe(removed));
    }
  } else {
    std::mt19937_64 rng(0x5eedULL ^ (ny * 0x9e3779b97f4a7c15ULL) ^ q);
    std::vector<std::uint32_t> order(ny);
    for (std::size_t s = 0; s < sampled_subsets; ++s) {
      for (std::uint32_t j = 0; j < ny; ++j) order[j] = j;
      std::vector<bool> removed(ny, false);
      for (std::size_t t = 0; t < q; ++t) {
        const auto pick = t + rng() % (ny - t);
        std::swap(order[t], order[pick]);
        removed[order[t]] = true;
      }
      if (!saturates_without(removed)) return VerifyResult::fail(describe(removed));
    }
  }

  if (nx <= 12) {
    // Hall form over every nonempty X' ⊆ X.
    const std::size_t words = (ny + 63) / 64;
    std::vector<std::vector<std::uint64_t>> nbits(nx, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < nx; ++i) {
      for (auto j : xy[i]) nbits[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
    std::vector<std::uint64_t> acc(words);
    for (std::uint32_t mask = 1; mask < (1u << nx); ++mask) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < nx; ++i) {
        if ((mask >> i) & 1u) {
          for (std::size_t w = 0; w < words; ++w) acc[w] |= nbits[i][w];
        }
      }
      std::size_t covered = 0;
      for (auto w : acc) covered += static_cast<std::size_t>(std::popcount(w));
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (covered < size + q) {
        return VerifyResult::fail("Hall condition fails: subset of X of size " + std::to_string(size) +
                                  " has only " + std::to_string(covered) + " neighbors in Y");
      }
    }
  } else {
    // Exact for large X: every X' containing x has |N(X')| >= |X'| + q iff
    // X with x copied q + 1 times still has a saturating matching.
    for (std::size_t i = 0; i < nx; ++i) {
      BipartiteAdjacency adj(xy);
      for (std::size_t c = 0; c < q; ++c) adj.push_back(xy[i]);
      if (hopcroft_karp(adj, ny).size != adj.size()) {
        return VerifyResult::fail("Hall condition fails for a subset containing vertex " +
                                  std::to_string(h.a_vertex(sides.x_pos[i])));
      }
    }
  }
  return {};
}

}  // namespace pvc

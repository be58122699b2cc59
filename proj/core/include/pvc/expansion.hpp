#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

/// A q-expansion M of X into Y inside a bipartite view H[A, B], with
/// N_H(Y) ⊆ X. All vertex ids are host-graph ids.
struct ExpansionCertificate {
  std::uint32_t q = 0;
  std::vector<VertexId> x_set;
  std::vector<VertexId> y_set;
  std::vector<Edge> m_edges;  // (x, y) pairs
};

/// X, Y with |N(X') ∩ Y| >= |X'| + q for every nonempty X' ⊆ X, and N_H(Y) ⊆ X.
struct AdditiveExpansionCertificate {
  std::uint32_t q = 0;
  std::vector<VertexId> x_set;
  std::vector<VertexId> y_set;
};

/// A nonempty Z ⊆ A with its surplus |N(Z)| - |Z| in the view it came from.
struct DeficientSet {
  std::vector<VertexId> z_set;
  std::int64_t surplus = 0;
};

struct VerifyResult {
  bool ok = true;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
  static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
};

/// Constructive expansion lemma. Requires |B| >= q|A|, A nonempty and no
/// isolated vertex in B; throws std::invalid_argument otherwise.
///
/// Each round solves s->a (cap q), a->b (unbounded), b->t (cap 1). A flow of
/// q|A| yields the expansion on the current sides. Otherwise the A-vertices on
/// the source side of the minimum cut form a set Z with |N(Z)| < q|Z|; Z and
/// N(Z) are removed and the search repeats.
ExpansionCertificate find_q_expansion(const BipartiteView& h, std::uint32_t q);

/// One round of find_q_expansion: a nonempty Z ⊆ A with |N(Z)| < q|Z| taken
/// from the minimum cut, or nullopt when a q-expansion of all of A exists.
std::optional<DeficientSet> find_expansion_violator(const BipartiteView& h, std::uint32_t q);

/// The view without Z (host ids in A) and N(Z).
BipartiteView remove_with_neighbors(const BipartiteView& h, const std::vector<VertexId>& z);

/// min over X ⊆ A with a ∈ X of |N(X)| - |X|, with a minimizing X.
///
/// Encoded as a minimum cut: s->a unbounded, s->a' capacity 1 for the other
/// A-vertices (cutting it means a' ∉ X), a'->b unbounded, b->t capacity 1
/// (cutting it pays for b ∈ N(X)). Cut value = |A \ X| + |N(X)|.
/// `a` is a host vertex id; throws std::invalid_argument if it is not in A.
DeficientSet min_surplus_containing(const BipartiteView& h, VertexId a);

/// Some nonempty X ⊆ A with |N(X)| < |X| + q, scanning A in ascending order
/// and returning the first hit; nullopt certifies the additive Hall condition.
std::optional<DeficientSet> find_additive_violator(const BipartiteView& h, std::uint32_t q);

/// Additive expansion lemma. Requires |B| > q|A|, A nonempty and no isolated
/// vertex in B; throws std::invalid_argument otherwise. Peels violators and
/// their neighborhoods until none remain.
AdditiveExpansionCertificate find_q_additive_expansion(const BipartiteView& h, std::uint32_t q);

VerifyResult verify_expansion(const BipartiteView& h, const ExpansionCertificate& cert);

/// Checks N_H(Y) ⊆ X, then that a matching saturating X survives removal of
/// any q vertices of Y (all q-subsets when |Y| <= 12, otherwise
/// `sampled_subsets` seeded random ones), and the Hall form exhaustively when
/// |X| <= 12.
VerifyResult verify_additive_expansion(const BipartiteView& h, const AdditiveExpansionCertificate& cert,
                                       std::size_t sampled_subsets = 256);

}  // namespace pvc

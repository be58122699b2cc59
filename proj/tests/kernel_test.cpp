#include <doctest.h>

#include <array>

#include "pvc/kernel.hpp"
#include "pvc/oracle.hpp"
#include "test_util.hpp"

using namespace pvc;
using namespace pvc::test;

namespace {

using Status = KernelOutcome::Status;

PartitionedInstance solved_state(const Graph& g, std::int64_t k, std::int64_t l) {
  return partition_instance({g, k, l}, solve_vclp(g));
}

/// Two adjacent centers 0 and 1, each with `leaves` private leaves.
Graph double_star(std::size_t leaves) {
  std::vector<Edge> edges{{0, 1}};
  VertexId next = 2;
  for (VertexId c = 0; c < 2; ++c)
    for (std::size_t i = 0; i < leaves; ++i) edges.emplace_back(c, next++);
  return Graph::from_edges(next, edges);
}

bool oracle_answer(const PvcInstance& inst) {
  return oracle::solve_pvc_exact(inst.graph, inst.k, inst.l).yes;
}

/// The answer the kernelizer commits to: its decision, or the oracle on the kernel.
bool kernel_answer(const KernelOutcome& out) {
  if (out.status == Status::yes) return true;
  if (out.status == Status::no) return false;
  return oracle_answer(out.instance);
}

}  // namespace

TEST_CASE("size bounds") {
  CHECK(kernel_size_bound(Variant::expansion, 1, 3) == 20);
  CHECK(kernel_size_bound(Variant::additive, 1, 3) == 16);
  CHECK(kernel_size_bound(Variant::additive, 5, 1) == 12);
  CHECK(kernel_size_bound(Variant::additive, 5, 0) == 10);
  CHECK(kernel_size_bound(Variant::expansion, 5, 0) == 10);
  CHECK(parse_variant("additive") == Variant::additive);
  CHECK_FALSE(parse_variant("crown"));
}

TEST_CASE("rr_isolated") {
  const auto g = Graph::from_edges(5, std::vector<Edge>{{1, 3}});
  const auto r = rr_isolated({g, 2, 1});
  CHECK(r.instance.graph.num_vertices() == 2);
  const auto labels = r.instance.graph.labels();
  CHECK(std::vector<Label>(labels.begin(), labels.end()) == std::vector<Label>{2, 4});
  CHECK(r.deleted == std::vector<Label>{1, 3, 5});
  CHECK(r.instance.k == 2);
  CHECK(r.instance.l == 1);

  CHECK(rr_isolated({seven_vertex(), 1, 3}).deleted.empty());
  CHECK(rr_isolated({Graph::from_edges(4, {}), 0, 0}).instance.graph.num_vertices() == 0);
}

TEST_CASE("rr_lp_bound") {
  CHECK(rr_lp_bound(solve_vclp(complete(5)), 0, 1));
  CHECK_FALSE(oracle::solve_pvc_exact(complete(5), 0, 1).yes);
  CHECK_FALSE(rr_lp_bound(solve_vclp(seven_vertex()), 1, 3));
  CHECK_FALSE(rr_lp_bound(solve_vclp(Graph::from_edges(6, {})), 0, 0));
}

TEST_CASE("rr_expansion on a star deletes everything") {
  auto state = solved_state(star(5), 1, 0);
  CHECK(state.sizes().v1 == 1);
  CHECK(state.sizes().v0 == 5);
  REQUIRE(rr_expansion(state) == StepResult::applied);
  CHECK(state.instance.graph.num_vertices() == 0);
  CHECK(state.instance.k == 0);
  REQUIRE(state.trace.steps.size() == 1);
  CHECK(state.trace.steps[0].x_labels == std::vector<Label>{1});
  CHECK(state.trace.steps[0].y_labels.size() == 5);
  CHECK(rr_expansion(state) == StepResult::not_applicable);

  const auto out = kernelize({star(5), 1, 0}, Variant::expansion);
  CHECK(out.status == Status::yes);
}

TEST_CASE("crown rules skip the seven-vertex example") {
  auto state = solved_state(seven_vertex(), 1, 3);
  const auto s = state.sizes();
  CHECK(s.v0 == 4);
  CHECK(s.v1 == 3);
  CHECK(s.vhalf == 0);
  CHECK(state.doubled[i1] == 2);
  CHECK(state.doubled[h2] == 0);
  CHECK(rr_expansion(state) == StepResult::not_applicable);
  CHECK(rr_additive(state) == StepResult::not_applicable);
  CHECK(state.trace.steps.empty());
}

TEST_CASE("rr_expansion on a double star removes both centers") {
  for (std::int64_t l = 1; l <= 3; ++l) {
    const auto g = double_star(static_cast<std::size_t>(2 * l + 2));
    auto state = solved_state(g, 2, l);
    REQUIRE(rr_expansion(state) == StepResult::applied);
    CHECK(state.instance.k == 0);
    CHECK(state.instance.graph.num_vertices() == 0);
    CHECK(state.trace.steps[0].x_labels == std::vector<Label>{1, 2});

    auto tight = solved_state(g, 1, l);
    CHECK(rr_expansion(tight) == StepResult::exceeds_budget);
    CHECK(tight.instance.graph.num_vertices() == g.num_vertices());
  }
}

TEST_CASE("rr_additive") {
  auto state = solved_state(star(2), 1, 1);
  REQUIRE(rr_additive(state) == StepResult::applied);
  CHECK(state.instance.graph.num_vertices() == 0);
  CHECK(state.instance.k == 0);

  // A center with exactly l + 1 leaves: the rule fires and the answer is kept.
  for (std::int64_t l = 1; l <= 4; ++l) {
    const auto g = star(static_cast<std::size_t>(l + 1));
    for (std::int64_t k = 0; k <= 1; ++k) {
      auto st = solved_state(g, k, l);
      const auto r = rr_additive(st);
      CHECK(r != StepResult::not_applicable);
      const bool reduced_yes = r == StepResult::applied && oracle_answer(st.instance);
      CHECK(reduced_yes == oracle_answer({g, k, l}));
    }
  }

  auto bad = solved_state(star(2), 1, 0);
  CHECK_THROWS_AS(rr_additive(bad), std::invalid_argument);
}

TEST_CASE("partition_instance rejects a broken partition") {
  auto sol = solve_vclp(star(2));
  sol.doubled[0] = 1;
  CHECK_THROWS(partition_instance({star(2), 1, 0}, sol));
}

TEST_CASE("kernelize examples") {
  for (auto v : {Variant::expansion, Variant::additive}) {
    const auto out = kernelize({seven_vertex(), 1, 3}, v);
    CHECK(out.status == Status::reduced);
    CHECK(out.instance.graph.num_vertices() == 7);
    CHECK(out.instance.k == 1);
    CHECK(out.lp_doubled_value == 6u);
  }

  const auto big_star = kernelize({star(100), 1, 1}, Variant::additive);
  CHECK(big_star.status == Status::yes);
  CHECK(big_star.trace.count(Rule::additive) == 1);

  const auto k5 = kernelize({complete(5), 0, 1}, Variant::additive);
  CHECK(k5.status == Status::no);
  CHECK(k5.trace.count(Rule::lp_bound) == 1);

  const auto few = kernelize({complete(3), 0, 3}, Variant::expansion);
  CHECK(few.status == Status::yes);

  const auto padded = kernelize({Graph::from_edges(4, std::vector<Edge>{{0, 1}}), 0, 0}, Variant::additive);
  CHECK(padded.trace.count(Rule::isolated) == 1);
  CHECK(padded.instance.graph.num_vertices() == 2);

  CHECK_THROWS_AS(kernelize({seven_vertex(), -1, 0}, Variant::additive), std::invalid_argument);
}

TEST_CASE("lift_solution") {
  const auto out = kernelize({star(5), 1, 0}, Variant::expansion);
  CHECK(lift_solution(out.trace, {}) == std::vector<Label>{1});

  KernelTrace empty;
  CHECK(lift_solution(empty, {3, 1, 2}) == std::vector<Label>{1, 2, 3});

  // Two stacked crown steps, one center each.
  const auto g = double_star(4);
  KernelTrace stacked;
  stacked.k_initial = 2;
  stacked.steps.push_back({Rule::expansion, {1}, {3, 4, 5, 6}, 1, 1});
  stacked.steps.push_back({Rule::expansion, {2}, {7, 8, 9, 10}, 1, 0});
  const auto lifted = lift_solution(stacked, {});
  CHECK(lifted == std::vector<Label>{1, 2});
  CHECK(count_surviving_edges(g, labels_to_ids(g, lifted)) == 0);

  CHECK_THROWS_AS(labels_to_ids(g, {99}), std::invalid_argument);
}

TEST_CASE("kernelize keeps the answer, meets the bound and lifts solutions") {
  gen::Rng rng(4242);
  for (int round = 0; round < 400; ++round) {
    const auto n = 1 + static_cast<std::size_t>(rng.below(12));
    const double p = std::array{0.1, 0.2, 0.4}[rng.below(3)];
    const auto g = gen::erdos_renyi(n, p, rng.next());
    const PvcInstance inst{g, static_cast<std::int64_t>(rng.below(5)), static_cast<std::int64_t>(rng.below(5))};
    const bool truth = oracle_answer(inst);

    for (auto v : {Variant::expansion, Variant::additive}) {
      const auto out = kernelize(inst, v);
      INFO("round " << round << " variant " << to_string(v));
      CHECK(kernel_answer(out) == truth);
      if (out.status != Status::reduced) continue;
      CHECK(static_cast<std::int64_t>(out.instance.graph.num_vertices()) <= kernel_size_bound(v, inst.k, inst.l));
      CHECK(out.instance.k <= inst.k);
      CHECK(out.instance.l == inst.l);

      const auto w = oracle::solve_pvc_exact(out.instance.graph, out.instance.k, out.instance.l);
      if (!w.yes) continue;
      std::vector<Label> kernel_labels;
      for (auto u : *w.witness) kernel_labels.push_back(out.instance.graph.label(u));
      const auto lifted = labels_to_ids(g, lift_solution(out.trace, kernel_labels));
      CHECK(static_cast<std::int64_t>(lifted.size()) <= inst.k);
      CHECK(static_cast<std::int64_t>(count_surviving_edges(g, lifted)) <= inst.l);
    }
  }
}

TEST_CASE("crown steps keep the partition invariant") {
  gen::Rng rng(99);
  std::size_t applied = 0;
  for (int round = 0; round < 300; ++round) {
    const auto g = gen::planted(10 + rng.below(30), 1 + rng.below(4), rng.below(3), rng.next(), 0.3).graph;
    const auto l = static_cast<std::int64_t>(rng.below(3));
    auto state = solved_state(rr_isolated({g, 6, l}).instance.graph, 6, l);
    for (int steps = 0; steps < 20; ++steps) {
      const auto before = state.instance.graph.num_vertices();
      const auto r = l >= 1 && (round % 2) ? rr_additive(state) : rr_expansion(state);
      if (r != StepResult::applied) break;
      ++applied;
      CHECK(state.instance.graph.num_vertices() < before);
      CHECK(state.instance.k >= 0);
      CHECK_NOTHROW(partition_instance(state.instance, make_half_integral(state.doubled)));
    }
  }
  CHECK(applied > 50);
}

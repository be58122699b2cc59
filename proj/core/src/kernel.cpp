#include "pvc/kernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "pvc/expansion.hpp"

namespace pvc {

const char* to_string(Variant v) {
  return v == Variant::expansion ? "expansion" : "additive";
}

std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "expansion") return Variant::expansion;
  if (s == "additive") return Variant::additive;
  return std::nullopt;
}

const char* to_string(KernelOutcome::Status s) {
  switch (s) {
    case KernelOutcome::Status::yes: return "yes";
    case KernelOutcome::Status::no: return "no";
    case KernelOutcome::Status::reduced: return "reduced";
  }
  return "?";
}

std::size_t KernelTrace::count(Rule r) const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [r](const TraceStep& s) { return s.rule == r; }));
}

std::int64_t kernel_size_bound(Variant v, std::int64_t k, std::int64_t l) {
  if (v == Variant::expansion) return (l + 2) * (k + l);
  return (std::max<std::int64_t>(l, 1) + 1) * (k + l);
}

IsolatedRemoval rr_isolated(const PvcInstance& inst) {
  std::vector<VertexId> isolated;
  for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) {
    if (inst.graph.degree(v) == 0) isolated.push_back(v);
  }
  IsolatedRemoval out;
  for (auto v : isolated) out.deleted.push_back(inst.graph.label(v));
  out.instance = {isolated.empty() ? inst.graph : delete_vertices(inst.graph, isolated).graph, inst.k, inst.l};
  return out;
}

bool rr_lp_bound(const HalfIntegralSolution& sol, std::int64_t k, std::int64_t l) {
  const auto lhs = static_cast<std::int64_t>(2 * sol.v1.size() + sol.vhalf.size());
  return lhs > 2 * (k + l);
}

PartitionSizes PartitionedInstance::sizes() const {
  PartitionSizes s;
  for (auto d : doubled) {
    if (d == 0) ++s.v0;
    else if (d == 1) ++s.vhalf;
    else ++s.v1;
  }
  return s;
}

namespace {

void check_partition(const Graph& g, const std::vector<std::uint8_t>& doubled) {
  if (doubled.size() != g.num_vertices()) throw std::invalid_argument("partition does not match graph");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (doubled[v] > 2) throw std::invalid_argument("partition value out of range");
    if (doubled[v] != 0) continue;
    for (auto w : g.neighbors(v)) {
      if (doubled[w] != 2) {
        throw std::logic_error("partition invariant N(V0) ⊆ V1 violated at vertex label " +
                               std::to_string(g.label(v)));
      }
    }
  }
}

/// Deletes `s` from the state, carrying the partition along.
void remove_from_state(PartitionedInstance& state, std::span<const VertexId> s) {
  auto sub = delete_vertices(state.instance.graph, s);
  std::vector<std::uint8_t> doubled(sub.graph.num_vertices());
  for (VertexId v = 0; v < sub.old_to_new.size(); ++v) {
    if (sub.old_to_new[v] != kNoVertex) doubled[sub.old_to_new[v]] = state.doubled[v];
  }
  state.instance.graph = std::move(sub.graph);
  state.doubled = std::move(doubled);
}

void remove_isolated(PartitionedInstance& state) {
  const auto& g = state.instance.graph;
  std::vector<VertexId> isolated;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) isolated.push_back(v);
  }
  if (isolated.empty()) return;
  TraceStep step;
  step.rule = Rule::isolated;
  for (auto v : isolated) step.y_labels.push_back(g.label(v));
  step.k_after = state.instance.k;
  remove_from_state(state, isolated);
  state.trace.steps.push_back(std::move(step));
}

enum class CrownKind { expansion, additive };

StepResult apply_crown(PartitionedInstance& state, CrownKind kind, std::uint32_t q) {
  const auto sizes = state.sizes();
  if (sizes.v1 == 0) return StepResult::not_applicable;
  const auto q_v1 = static_cast<std::size_t>(q) * sizes.v1;
  const bool guard = kind == CrownKind::expansion ? sizes.v0 >= q_v1 : sizes.v0 > q_v1;
  if (!guard) return StepResult::not_applicable;

  const auto& g = state.instance.graph;
  std::vector<VertexId> v1, v0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (state.doubled[v] == 2) v1.push_back(v);
    else if (state.doubled[v] == 0) v0.push_back(v);
  }
  const auto h = bipartite_view(g, v1, v0);

  std::vector<VertexId> x, y;
  if (kind == CrownKind::expansion) {
    auto cert = find_q_expansion(h, q);
    x = std::move(cert.x_set);
    y = std::move(cert.y_set);
  } else {
    auto cert = find_q_additive_expansion(h, q);
    x = std::move(cert.x_set);
    y = std::move(cert.y_set);
  }

  const auto in_x = vertex_mask(g, x);
  for (auto u : y) {
    for (auto w : g.neighbors(u)) {
      if (!in_x[w]) {
        throw std::logic_error("crown rule: N(Y) not contained in X at vertex label " +
                               std::to_string(g.label(u)));
      }
    }
  }

  const auto decrement = static_cast<std::int64_t>(x.size());
  if (decrement > state.instance.k) return StepResult::exceeds_budget;

  TraceStep step;
  step.rule = kind == CrownKind::expansion ? Rule::expansion : Rule::additive;
  for (auto v : x) step.x_labels.push_back(g.label(v));
  for (auto v : y) step.y_labels.push_back(g.label(v));
  step.k_decrement = decrement;
  step.k_after = state.instance.k - decrement;

  std::vector<VertexId> doomed(x);
  doomed.insert(doomed.end(), y.begin(), y.end());
  remove_from_state(state, doomed);
  state.instance.k = step.k_after;
  state.trace.steps.push_back(std::move(step));

  remove_isolated(state);
  check_partition(state.instance.graph, state.doubled);
  return StepResult::applied;
}

}  // namespace

PartitionedInstance partition_instance(PvcInstance inst, const HalfIntegralSolution& sol) {
  PartitionedInstance state;
  state.doubled = sol.doubled;
  state.instance = std::move(inst);
  state.trace.k_initial = state.instance.k;
  check_partition(state.instance.graph, state.doubled);
  return state;
}

StepResult rr_expansion(PartitionedInstance& state) {
  if (state.instance.l < 0) throw std::invalid_argument("rr_expansion: l must be non-negative");
  return apply_crown(state, CrownKind::expansion, static_cast<std::uint32_t>(state.instance.l + 1));
}

StepResult rr_additive(PartitionedInstance& state) {
  if (state.instance.l < 1) throw std::invalid_argument("rr_additive: requires l >= 1");
  return apply_crown(state, CrownKind::additive, static_cast<std::uint32_t>(state.instance.l));
}

KernelOutcome kernelize(const PvcInstance& inst, Variant variant) {
  if (inst.k < 0 || inst.l < 0) throw std::invalid_argument("kernelize: k and l must be non-negative");
  if (inst.l >= std::int64_t{1} << 31) throw std::invalid_argument("kernelize: l too large");

  KernelOutcome out;
  out.trace.k_initial = inst.k;

  auto decide = [&out](KernelOutcome::Status status, std::string reason) {
    out.status = status;
    out.reason = std::move(reason);
    return out;
  };

  auto iso = rr_isolated(inst);
  if (!iso.deleted.empty()) {
    out.trace.steps.push_back({Rule::isolated, {}, std::move(iso.deleted), 0, inst.k});
  }
  out.instance = std::move(iso.instance);
  const auto l = out.instance.l;
  if (static_cast<std::int64_t>(out.instance.graph.num_edges()) <= l) {
    return decide(KernelOutcome::Status::yes, "at most l edges");
  }

  const auto sol = solve_vclp(out.instance.graph);
  out.lp_doubled_value = sol.doubled_value;
  out.lp_partition = {sol.v0.size(), sol.v1.size(), sol.vhalf.size()};
  out.final_partition = out.lp_partition;
  if (rr_lp_bound(sol, out.instance.k, l)) {
    out.trace.steps.push_back({Rule::lp_bound, {}, {}, 0, out.instance.k});
    return decide(KernelOutcome::Status::no, "LP optimum exceeds k + l");
  }

  auto state = partition_instance(std::move(out.instance), sol);
  state.trace = std::move(out.trace);
  const bool use_additive = variant == Variant::additive && l >= 1;
  for (;;) {
    const auto result = use_additive ? rr_additive(state) : rr_expansion(state);
    if (result == StepResult::not_applicable) break;
    if (result == StepResult::exceeds_budget) {
      out.instance = std::move(state.instance);
      out.trace = std::move(state.trace);
      out.final_partition = state.sizes();
      return decide(KernelOutcome::Status::no, "crown needs more than k vertices");
    }
  }
  out.final_partition = state.sizes();
  out.instance = std::move(state.instance);
  out.trace = std::move(state.trace);

  if (static_cast<std::int64_t>(out.instance.graph.num_edges()) <= l) {
    return decide(KernelOutcome::Status::yes, "at most l edges after reduction");
  }
  const auto bound = kernel_size_bound(variant, inst.k, l);
  if (static_cast<std::int64_t>(out.instance.graph.num_vertices()) > bound) {
    throw std::logic_error("kernelize: kernel has " + std::to_string(out.instance.graph.num_vertices()) +
                           " vertices, bound is " + std::to_string(bound));
  }
  return decide(KernelOutcome::Status::reduced, "no rule applies");
}

std::vector<Label> lift_solution(const KernelTrace& trace, const std::vector<Label>& s_kernel) {
  std::vector<Label> out(s_kernel);
  for (const auto& step : trace.steps) out.insert(out.end(), step.x_labels.begin(), step.x_labels.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> labels_to_ids(const Graph& g, const std::vector<Label>& labels) {
  std::unordered_map<Label, VertexId> index;
  for (VertexId v = 0; v < g.num_vertices(); ++v) index.emplace(g.label(v), v);
  std::vector<VertexId> out;
  out.reserve(labels.size());
  for (auto lab : labels) {
    auto it = index.find(lab);
    if (it == index.end()) throw std::invalid_argument("unknown vertex label " + std::to_string(lab));
    out.push_back(it->second);
  }
  return out;
}

}  // namespace pvc

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvc/graph.hpp"
#include "pvc/vclp.hpp"

namespace pvc {

/// Partial Vertex Cover: can deleting at most k vertices leave at most l edges?
struct PvcInstance {
  Graph graph;
  std::int64_t k = 0;
  std::int64_t l = 0;
};

enum class Variant { expansion, additive };

const char* to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view s);

enum class Rule : std::uint8_t {
  isolated = 1,   // delete isolated vertices
  lp_bound = 2,   // LP optimum exceeds k + l: answer no
  expansion = 3,  // (l+1)-expansion crown in G[V1, V0]
  additive = 4,   // l-additive expansion in G[V1, V0]
};

struct TraceStep {
  Rule rule = Rule::isolated;
  std::vector<Label> x_labels;  // deleted from V1 (rules 3/4), charged to k
  std::vector<Label> y_labels;  // deleted from V0 (rules 3/4) or isolated vertices (rule 1)
  std::int64_t k_decrement = 0;
  std::int64_t k_after = 0;
};

struct KernelTrace {
  std::int64_t k_initial = 0;
  std::vector<TraceStep> steps;

  std::int64_t k_current() const { return steps.empty() ? k_initial : steps.back().k_after; }
  std::size_t count(Rule r) const;
};

struct PartitionSizes {
  std::size_t v0 = 0;
  std::size_t v1 = 0;
  std::size_t vhalf = 0;
};

struct KernelOutcome {
  enum class Status { yes, no, reduced };

  Status status = Status::reduced;
  std::string reason;
  /// The reduced instance (status reduced), or the state reached when the
  /// answer was decided. Labels are those of the input graph.
  PvcInstance instance;
  KernelTrace trace;
  std::optional<std::uint64_t> lp_doubled_value;
  PartitionSizes lp_partition;     // as computed, after rule 1
  PartitionSizes final_partition;  // V0', V1', V1/2 of the emitted kernel

  bool decided() const { return status != Status::reduced; }
};

const char* to_string(KernelOutcome::Status s);

/// (l + 2)(k + l) for the expansion variant, (max(l,1) + 1)(k + l) for the
/// additive one.
std::int64_t kernel_size_bound(Variant v, std::int64_t k, std::int64_t l);

/// Removes every isolated vertex; k and l are unchanged.
struct IsolatedRemoval {
  PvcInstance instance;
  std::vector<Label> deleted;
};
IsolatedRemoval rr_isolated(const PvcInstance& inst);

/// True iff 2|V1| + |V1/2| > 2(k + l), i.e. the instance is a no-instance.
bool rr_lp_bound(const HalfIntegralSolution& sol, std::int64_t k, std::int64_t l);

/// An instance together with a maintained half-integral partition (doubled
/// values indexed by the instance's vertices) and the trace so far.
struct PartitionedInstance {
  PvcInstance instance;
  std::vector<std::uint8_t> doubled;
  KernelTrace trace;

  PartitionSizes sizes() const;
};

/// Builds the state consumed by rr_expansion / rr_additive. Throws
/// std::invalid_argument if `sol` does not fit the graph or breaks N(V0) ⊆ V1.
PartitionedInstance partition_instance(PvcInstance inst, const HalfIntegralSolution& sol);

/// Result of one crown step: the rule fired, or it fired but would push k
/// below zero (the instance is then a no-instance).
enum class StepResult { not_applicable, applied, exceeds_budget };

/// If V1 ≠ ∅ and |V0| >= (l+1)|V1|, finds an (l+1)-expansion of X into Y in
/// G[V1, V0], deletes X ∪ Y and lowers k by |X|. Newly isolated vertices are
/// removed as a rule-1 step. Throws std::logic_error if N(Y) ⊄ X in G.
StepResult rr_expansion(PartitionedInstance& state);

/// If V1 ≠ ∅ and |V0| > q|V1|, finds a q-additive expansion with q = l
/// (requires l >= 1), deletes X ∪ Y and lowers k by |X|.
StepResult rr_additive(PartitionedInstance& state);

/// The full pipeline: rule 1, trivial-yes check (m <= l), one LP solve,
/// rule 2, then rule 3 (expansion) or rule 4 (additive; q = 1 expansions when
/// l = 0) until the guard fails. The size bound is asserted on every reduced
/// outcome.
KernelOutcome kernelize(const PvcInstance& inst, Variant variant);

/// s_kernel (labels of the reduced instance) plus every deleted X set.
std::vector<Label> lift_solution(const KernelTrace& trace, const std::vector<Label>& s_kernel);

/// Label -> index lookup for translating lifted labels back to a graph.
std::vector<VertexId> labels_to_ids(const Graph& g, const std::vector<Label>& labels);

}  // namespace pvc

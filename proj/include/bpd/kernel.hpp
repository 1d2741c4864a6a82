#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bpd/graph.hpp"
#include "bpd/instance.hpp"

namespace bpd {

// Trace steps. Vertex ids are those of the instance at the time the step was
// taken; a Relabel step closes every batch of vertex removals.
struct RemovedFreeComponent {
  std::vector<Vertex> vertices;
};
struct SolvedSmallComponent {
  std::vector<Vertex> vertices;
  DeletionSet deletions;
  std::int64_t cost = 0;
};
struct BridgeRule {
  VertexPair bridge;
  std::vector<Vertex> removed;
};
struct ForcedEdgeDeletion {
  VertexPair edge;
};
struct RemovedVertex {
  Vertex vertex = 0;
};
struct TrivialYes {
  Color color = Color::Blue;
  DeletionSet deletions;
};
struct Relabel {
  std::vector<Vertex> new_to_old;
  Vertex old_n = 0;
};

using KernelStep = std::variant<RemovedFreeComponent, SolvedSmallComponent, BridgeRule,
                                ForcedEdgeDeletion, RemovedVertex, TrivialYes, Relabel>;

struct KernelTrace {
  std::vector<KernelStep> steps;

  std::int64_t cost() const;
  void append(const KernelTrace& other);
  bool empty() const noexcept { return steps.empty(); }
};

std::string_view step_name(const KernelStep& step);

struct RuleResult {
  Instance instance;
  KernelTrace trace;
  bool applied = false;
};

// RR1: drop bicolored-P3-free components; solve components of at most five
// vertices exactly and charge their optimum to k.
RuleResult rr1_components(const Instance& inst);
// RR2, a single application if some bridge qualifies.
RuleResult rr2_bridge(const Instance& inst);
RuleResult rr2_bridge_exhaustive(const Instance& inst);
// RR3: delete an edge with more than k P3 witnesses, repeatedly.
RuleResult rr3_heavy_edge(const Instance& inst);
// RR4: drop every vertex whose closed neighborhood avoids all P3 vertices.
RuleResult rr4_far_vertex(const Instance& inst);

// The smaller color class when it fits in the budget (blue on ties).
std::optional<DeletionSet> trivial_yes_check(const Instance& inst);

struct KernelOptions {
  bool trivial_yes = true;
  bool bridge_rule = false;
};

struct KernelResult {
  Instance kernel;
  KernelTrace trace;
  bool no_instance = false;  // kernel.k < 0
  bool trivially_solved = false;
  // Vertex bound 6k'D'min(k',2D') + 6k'min(k',2D') in the kernel's own k' and D'.
  std::int64_t vertex_bound = 0;
  bool within_bound = true;
};

std::int64_t kernel_vertex_bound(std::int64_t k, std::int64_t max_degree);

// Trivial-yes, then RR3, RR4 (and RR2 when enabled), then RR1, repeated until
// nothing changes. Running it again on its own output changes nothing.
KernelResult kernelize(const Instance& inst, const KernelOptions& options = {});

// Maps a kernel solution back to the original ids and adds every forced
// deletion recorded in the trace.
DeletionSet lift_solution(const KernelTrace& trace, const DeletionSet& kernel_solution);

// Applies the trace to the original instance; must reproduce the kernel.
Instance replay(const Instance& original, const KernelTrace& trace);

}  // namespace bpd

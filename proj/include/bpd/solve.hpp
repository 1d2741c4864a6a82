#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpd/detect.hpp"
#include "bpd/graph.hpp"
#include "bpd/instance.hpp"
#include "bpd/matching.hpp"

namespace bpd {

enum class Method {
  Auto,
  Branch,
  VertexCover,
  DegreeTwo,
  MonoFree,
  Oracle,
  Nice,
  KernelOnly,
  TrivialYes,
};

std::string_view method_name(Method m) noexcept;
std::optional<Method> method_from_name(std::string_view name) noexcept;

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  int max_depth = 0;
  std::uint64_t br1 = 0;  // multi-conflict edge
  std::uint64_t br2 = 0;  // diamonds
  std::uint64_t br3 = 0;  // hourglass
  std::uint64_t nice_leaves = 0;
  double time_ms = 0;

  void merge(const SearchStats& other);
};

struct SolveResult {
  bool yes = false;
  std::optional<DeletionSet> solution;  // present iff yes
  std::optional<std::int64_t> optimum;  // optimize mode only
  SearchStats stats;
  Method method = Method::Auto;
  std::int64_t k = 0;
};

struct SolveOptions {
  // Per-node bound from exact optima of small closed neighborhoods on top of
  // the P3 packing bound. Off gives the plain packing-pruned search.
  bool block_bound = true;
  bool parallel = false;
  unsigned threads = 0;  // 0: BPD_THREADS or hardware concurrency
};

// Nice graphs: yes iff the number of bicolored P3s is at most k.
SolveResult solve_nice(const ColoredGraph& g, std::int64_t k);

// Branching on multi-conflict edges, diamonds and hourglasses down to nice
// graphs. Every child lowers k by exactly the number of edges it deletes.
SolveResult solve_branching(const Instance& inst, const SolveOptions& options = {});

struct ConflictGraph {
  std::vector<VertexPair> red;   // left side
  std::vector<VertexPair> blue;  // right side
  BipartiteGraph graph;          // red index -> blue indices
  std::size_t conflicts = 0;
};

ConflictGraph build_conflict_graph(const ColoredGraph& g);
// Minimum vertex cover of the conflict graph, as graph edges.
DeletionSet conflict_cover(const ConflictGraph& cg);

// Requires no endangered bicolored K3.
SolveResult solve_endangered_free(const Instance& inst);
// Requires maximum degree two.
SolveResult solve_degree_two(const Instance& inst);
// Requires no monochromatic P3 or K3.
SolveResult solve_mono_free(const Instance& inst);
// Exhaustive search capped at k.
SolveResult solve_oracle(const Instance& inst);

// Trivial-yes check, kernelization, then the cheapest exact method that
// applies to the kernel; the solution is lifted back to the input ids.
SolveResult solve_auto(const Instance& inst, const SolveOptions& options = {});

SolveResult solve_with(Method method, const Instance& inst, const SolveOptions& options = {});

// Minimum deletion count with a witness. The specialized solvers return
// minimum solutions directly; the branching solver is rerun with k increasing
// from a lower bound.
SolveResult optimize(Method method, const ColoredGraph& g, const SolveOptions& options = {});

// Largest lower bound the search uses at a node: the P3 packing bound and,
// when enabled, the small-neighborhood block bound.
std::int64_t lower_bound(const ColoredGraph& g, bool block_bound);

}  // namespace bpd

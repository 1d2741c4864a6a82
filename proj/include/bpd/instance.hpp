#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bpd/graph.hpp"

namespace bpd {

// Graph plus deletion budget. A negative k marks an infeasible instance.
struct Instance {
  ColoredGraph graph;
  std::int64_t k = 0;

  InstanceStats stats() const { return bpd::stats(graph, k); }
  bool operator==(const Instance&) const = default;
};

// Canonical (sorted, deduplicated) set of vertex pairs proposed for deletion.
using DeletionSet = std::vector<VertexPair>;

struct Verdict {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Checks that every pair is an edge, that G - S has no bicolored P3 and that
// |S| <= k. Duplicates in S are an error.
Verdict verify_solution(const ColoredGraph& g, const DeletionSet& s, std::int64_t k);

// All edges of one color, canonical order.
DeletionSet color_class(const ColoredGraph& g, Color c);

}  // namespace bpd

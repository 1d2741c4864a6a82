#pragma once

#include <cstdint>
#include <optional>

#include "bpd/graph.hpp"
#include "bpd/instance.hpp"

namespace bpd {

struct OracleResult {
  std::optional<std::int64_t> optimum;  // empty when the optimum exceeds the cap
  DeletionSet witness;
  std::uint64_t nodes = 0;
};

// Exact minimum deletion count by complete two-way branching on one bicolored
// P3 at a time, pruned against the best solution found so far. Exponential;
// meant for graphs with a few dozen edges at most.
OracleResult oracle_min_deletions(const ColoredGraph& g,
                                  std::optional<std::int64_t> cap = std::nullopt);

}  // namespace bpd

#pragma once

#include <vector>

namespace bpd {

// Bipartite graph given by left-side adjacency lists into [0, right).
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adj;
};

struct Matching {
  int size = 0;
  std::vector<int> mate_left;   // -1 if unmatched
  std::vector<int> mate_right;  // -1 if unmatched
};

// Hopcroft-Karp, O(E sqrt(V)).
Matching maximum_matching(const BipartiteGraph& bg);

struct BipartiteCover {
  std::vector<int> left;
  std::vector<int> right;
  int size() const noexcept { return static_cast<int>(left.size() + right.size()); }
};

// Konig: with Z the vertices reachable from free left vertices along
// alternating paths, (L \ Z) + (R n Z) is a minimum vertex cover.
BipartiteCover konig_cover(const BipartiteGraph& bg, const Matching& m);
BipartiteCover minimum_vertex_cover(const BipartiteGraph& bg);

}  // namespace bpd

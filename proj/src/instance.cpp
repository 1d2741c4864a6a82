#include "bpd/instance.hpp"

#include <algorithm>

#include "bpd/detect.hpp"

namespace bpd {

Verdict verify_solution(const ColoredGraph& g, const DeletionSet& s, std::int64_t k) {
  DeletionSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return {false, "duplicate pair in deletion set"};
  for (const VertexPair& p : sorted) {
    if (p.u < 0 || p.v >= g.num_vertices() || p.u == p.v || g.code(p.u, p.v) == 0)
      return {false, "{" + std::to_string(p.u) + "," + std::to_string(p.v) + "} is not an edge"};
  }
  if (static_cast<std::int64_t>(sorted.size()) > k)
    return {false, "deletion set has " + std::to_string(sorted.size()) + " edges, budget is " +
                       std::to_string(k)};
  const ColoredGraph rest = delete_edges(g, std::span<const VertexPair>(sorted));
  if (auto p = first_p3(rest))
    return {false, "bicolored P3 " + std::to_string(p->u) + "-" + std::to_string(p->v) + "-" +
                       std::to_string(p->w) + " survives"};
  return {true, {}};
}

DeletionSet color_class(const ColoredGraph& g, Color c) {
  DeletionSet out;
  for (const Edge& e : g.edges())
    if (e.color == c) out.push_back(e.ends);
  return out;
}

}  // namespace bpd

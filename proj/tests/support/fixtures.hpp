#pragma once

#include <initializer_list>
#include <random>
#include <tuple>
#include <vector>

#include "bpd/graph.hpp"

namespace bpd::fixtures {

inline ColoredGraph graph_of(Vertex n, std::initializer_list<std::tuple<Vertex, Vertex, char>> list) {
  std::vector<Edge> edges;
  for (auto [u, v, c] : list) edges.emplace_back(u, v, c == 'b' ? Color::Blue : Color::Red);
  return ColoredGraph(n, edges);
}

// u-v blue, v-w red.
inline ColoredGraph single_p3() { return graph_of(3, {{0, 1, 'b'}, {1, 2, 'r'}}); }

inline ColoredGraph disjoint_p3s(int count) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < count; ++i) {
    edges.emplace_back(3 * i, 3 * i + 1, Color::Blue);
    edges.emplace_back(3 * i + 1, 3 * i + 2, Color::Red);
  }
  return ColoredGraph(3 * count, edges);
}

// Path on len+1 vertices with the given edge colors.
inline ColoredGraph path_of(const std::vector<Color>& colors) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < static_cast<Vertex>(colors.size()); ++i) edges.emplace_back(i, i + 1, colors[i]);
  return ColoredGraph(static_cast<Vertex>(colors.size()) + 1, edges);
}

inline ColoredGraph cycle_of(const std::vector<Color>& colors) {
  const auto n = static_cast<Vertex>(colors.size());
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n, colors[i]);
  return ColoredGraph(n, edges);
}

}  // namespace bpd::fixtures

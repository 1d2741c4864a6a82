#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace bpd {

using Vertex = std::int32_t;

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

constexpr Color other(Color c) noexcept {
  return c == Color::Red ? Color::Blue : Color::Red;
}

constexpr char color_code(Color c) noexcept { return c == Color::Red ? 'r' : 'b'; }

constexpr std::string_view color_name(Color c) noexcept {
  return c == Color::Red ? "red" : "blue";
}

// Unordered vertex pair, always stored with u < v.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  constexpr VertexPair() = default;
  constexpr VertexPair(Vertex a, Vertex b) noexcept
      : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr auto operator<=>(const VertexPair&) const = default;
};

struct Edge {
  VertexPair ends;
  Color color = Color::Red;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b, Color c) noexcept : ends(a, b), color(c) {}

  constexpr Vertex u() const noexcept { return ends.u; }
  constexpr Vertex v() const noexcept { return ends.v; }

  constexpr auto operator<=>(const Edge&) const = default;
};

struct Neighbor {
  Vertex vertex = 0;
  Color color = Color::Red;

  constexpr auto operator<=>(const Neighbor&) const = default;
};

// Sorts and deduplicates a set of pairs in place; the canonical form of every
// edge set the library hands out.
void canonicalize(std::vector<VertexPair>& pairs);

// Simple undirected graph whose edges are each red or blue.
//
// A ColoredGraph is an immutable value once built. Vertex ids are 0..n-1.
// Per-vertex neighbor lists are kept sorted by vertex id; pair lookups go
// through a dense color matrix for graphs up to kDenseLimit vertices and fall
// back to binary search on the shorter neighbor list above that.
class ColoredGraph {
 public:
  static constexpr Vertex kDenseLimit = 4096;

  ColoredGraph() = default;
  explicit ColoredGraph(Vertex n);
  // Throws PreconditionError on self-loops, duplicate pairs or ids >= n.
  ColoredGraph(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return m_; }
  std::size_t num_edges(Color c) const noexcept {
    return c == Color::Red ? m_red_ : m_ - m_red_;
  }

  // Precondition-checked accessors.
  std::span<const Neighbor> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int degree(Vertex v, Color c) const;
  std::optional<Color> color(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return color(u, v).has_value(); }

  // Unchecked variants for inner loops; ids must be valid.
  std::span<const Neighbor> adj(Vertex v) const noexcept { return adj_[v]; }
  // 0 = no edge, 1 = red, 2 = blue.
  std::uint8_t code(Vertex u, Vertex v) const noexcept {
    if (!dense_.empty()) return dense_[static_cast<std::size_t>(u) * n_ + v];
    return sparse_code(u, v);
  }

  // All edges in canonical (u, v) order.
  std::vector<Edge> edges() const;
  int max_degree() const noexcept;
  int max_degree(Color c) const noexcept;

  void check_vertex(Vertex v) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  friend ColoredGraph delete_edges(const ColoredGraph&, std::span<const VertexPair>);

  std::uint8_t sparse_code(Vertex u, Vertex v) const noexcept;
  void insert_edge(Vertex u, Vertex v, Color c);
  void erase_edge(Vertex u, Vertex v);

  Vertex n_ = 0;
  std::size_t m_ = 0;
  std::size_t m_red_ = 0;
  std::vector<std::vector<Neighbor>> adj_;
  std::vector<std::uint8_t> dense_;
};

constexpr std::optional<Color> decode_color(std::uint8_t code) noexcept {
  if (code == 0) return std::nullopt;
  return code == 1 ? Color::Red : Color::Blue;
}

struct InstanceStats {
  Vertex n = 0;
  std::size_t m = 0;
  std::size_t m_red = 0;
  std::size_t m_blue = 0;
  int max_degree = 0;
  int max_blue_degree = 0;
  int max_red_degree = 0;
  std::int64_t ell = 0;  // m - k
};

InstanceStats stats(const ColoredGraph& g, std::int64_t k);

// N(v) with edge colors, N[v], and N^2(v) = N(N(v)) \ {v}.
std::vector<Neighbor> neighbors(const ColoredGraph& g, Vertex v);
std::vector<Vertex> closed_neighborhood(const ColoredGraph& g, Vertex v);
std::vector<Vertex> second_neighborhood(const ColoredGraph& g, Vertex v);

// E(A, B) in canonical order. A and B may overlap; E(A, A) is edges_within(A).
std::vector<Edge> edges_between(const ColoredGraph& g, std::span<const Vertex> a,
                                std::span<const Vertex> b);
std::vector<Edge> edges_within(const ColoredGraph& g, std::span<const Vertex> a);

// G - S. Throws PreconditionError if some pair in S is not an edge.
ColoredGraph delete_edges(const ColoredGraph& g, std::span<const VertexPair> s);
// Same, but also checks that each listed edge has the stated color.
ColoredGraph delete_edges(const ColoredGraph& g, std::span<const Edge> s);

// Components sorted by smallest member; each component sorted.
std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& g);
std::vector<VertexPair> bridges(const ColoredGraph& g);

struct InducedSubgraph {
  ColoredGraph graph;
  std::vector<Vertex> to_original;  // new id -> old id, increasing
};

// Dense ids 0..m-1 for the edges of a fixed graph, in canonical edge order.
class EdgeIds {
 public:
  explicit EdgeIds(const ColoredGraph& g);
  // Precondition: {u,v} is an edge of the graph this index was built from.
  int id(Vertex u, Vertex v) const noexcept;
  int size() const noexcept { return total_; }

 private:
  const ColoredGraph* g_;
  std::vector<int> offset_;
  int total_ = 0;
};

// G[keep] relabeled to 0..|keep|-1 in increasing original-id order.
InducedSubgraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> keep);

}  // namespace bpd

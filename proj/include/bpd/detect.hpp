#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "bpd/graph.hpp"

namespace bpd {

enum class StructureKind {
  BicoloredP3,
  MonoP3,
  MonoK3,
  BicoloredK3,
  EndangeredK3,
  LCDiamond,
  LODiamond,
  IIZDiamond,
  CCHourglass,
  MultiConflictEdge,
};

inline constexpr StructureKind kAllKinds[] = {
    StructureKind::BicoloredP3,  StructureKind::MonoP3,       StructureKind::MonoK3,
    StructureKind::BicoloredK3,  StructureKind::EndangeredK3, StructureKind::LCDiamond,
    StructureKind::LODiamond,    StructureKind::IIZDiamond,   StructureKind::CCHourglass,
    StructureKind::MultiConflictEdge,
};

std::string_view kind_name(StructureKind kind) noexcept;
std::optional<StructureKind> kind_from_name(std::string_view name) noexcept;

// One located pattern. `witness` lists vertices in role order:
//   BicoloredP3  (u,v,w)       {u,v} has color `blue_role`, {v,w} the other; v is the center
//   MonoP3       (u,v,w)       center v, u < w
//   MonoK3       (u,v,w)       sorted
//   BicoloredK3  (a,v,w)       a is where the two same-colored edges meet, v < w
//   EndangeredK3               as BicoloredK3
//   *Diamond     (u,v,w,z)
//   CCHourglass  (u,v,w,z1,z2)
//   MultiConflictEdge          endpoints of e1, then the far endpoints of e2 and e3
// `blue_role` is the actual color drawn blue in the canonical template; for
// mono and bicolored triangles it is the majority color.
// MultiConflictEdge also fills `edges` with e1, e2, e3.
struct ForbiddenStructure {
  StructureKind kind = StructureKind::BicoloredP3;
  std::vector<Vertex> witness;
  Color blue_role = Color::Blue;
  std::vector<VertexPair> edges;

  bool operator==(const ForbiddenStructure&) const = default;
};

// A bicolored P3 with center v: {u,v} blue, {v,w} red.
struct P3 {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;

  VertexPair blue_edge() const noexcept { return {u, v}; }
  VertexPair red_edge() const noexcept { return {v, w}; }
  auto operator<=>(const P3&) const = default;
};

// Every induced bicolored P3 once, ordered by (center, blue end, red end).
std::vector<P3> enumerate_p3(const ColoredGraph& g);
std::size_t count_p3(const ColoredGraph& g);
std::optional<P3> first_p3(const ColoredGraph& g);
bool is_p3_free(const ColoredGraph& g);
std::vector<ForbiddenStructure> enumerate_bicolored_p3(const ColoredGraph& g);

// Per-vertex flag: is v in some bicolored P3?
std::vector<char> p3_vertex_mask(const ColoredGraph& g);

// Edges forming a bicolored P3 with e, canonical order. Throws if e is absent.
std::vector<VertexPair> p3_partners(const ColoredGraph& g, VertexPair e);
// Vertices w with G[{u,v,w}] a bicolored P3. One per partner edge.
std::vector<Vertex> p3_witnesses(const ColoredGraph& g, VertexPair e);
// Unchecked partner count for inner loops.
int partner_count(const ColoredGraph& g, Vertex a, Vertex b) noexcept;

// Does `s` describe an induced occurrence of its kind in g? Checks every
// witness pair against the kind's template (absent pairs included).
bool verify_structure(const ColoredGraph& g, const ForbiddenStructure& s);

std::optional<ForbiddenStructure> find_first(const ColoredGraph& g, StructureKind kind);
std::vector<ForbiddenStructure> find_all(const ColoredGraph& g, StructureKind kind);

// First of MultiConflictEdge, LC-, LO-, IIZ-Diamond, CC-Hourglass in that
// order, lexicographically smallest witness within a kind.
std::optional<ForbiddenStructure> find_branch_structure(const ColoredGraph& g);
bool is_nice(const ColoredGraph& g);

std::optional<ForbiddenStructure> find_endangered_k3(const ColoredGraph& g);

struct ClassFlags {
  bool bicolored_p3_free = false;
  bool endangered_k3_free = false;
  bool mono_free = false;
  bool max_degree_le2 = false;
};

// Throws InvariantError if the graph is mono-free but has a color degree > 2.
ClassFlags classify(const ColoredGraph& g);
bool is_mono_free(const ColoredGraph& g);

// Greedy edge-disjoint P3 packing in enumeration order. Its size is a lower
// bound on the optimum.
std::vector<P3> greedy_p3_packing(const ColoredGraph& g);

}  // namespace bpd

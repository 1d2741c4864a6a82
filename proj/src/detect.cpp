#include "bpd/detect.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "bpd/errors.hpp"

namespace bpd {

namespace {

// Template pair: role indices plus 'b' (blue role), 'r' (red role) or '-' (non-edge).
struct TPair {
  int a;
  int b;
  char c;
};

constexpr std::array<TPair, 3> kP3Tpl{{{0, 1, 'b'}, {1, 2, 'r'}, {0, 2, '-'}}};
constexpr std::array<TPair, 3> kMonoP3Tpl{{{0, 1, 'b'}, {1, 2, 'b'}, {0, 2, '-'}}};
constexpr std::array<TPair, 3> kMonoK3Tpl{{{0, 1, 'b'}, {1, 2, 'b'}, {0, 2, 'b'}}};
constexpr std::array<TPair, 3> kBiK3Tpl{{{0, 1, 'b'}, {0, 2, 'b'}, {1, 2, 'r'}}};
constexpr std::array<TPair, 6> kLcTpl{
    {{0, 1, 'b'}, {1, 2, 'r'}, {0, 3, 'b'}, {1, 3, 'r'}, {2, 3, 'b'}, {0, 2, '-'}}};
constexpr std::array<TPair, 6> kLoTpl{
    {{0, 1, 'b'}, {1, 2, 'r'}, {0, 3, 'b'}, {1, 3, 'b'}, {2, 3, 'r'}, {0, 2, '-'}}};
constexpr std::array<TPair, 6> kIizTpl{
    {{0, 1, 'b'}, {1, 2, 'r'}, {0, 3, 'r'}, {1, 3, 'b'}, {2, 3, 'b'}, {0, 2, '-'}}};
constexpr std::array<TPair, 10> kHourglassTpl{{{0, 1, 'b'},
                                               {1, 2, 'r'},
                                               {0, 3, 'b'},
                                               {1, 3, 'r'},
                                               {1, 4, 'b'},
                                               {2, 4, 'r'},
                                               {0, 2, '-'},
                                               {0, 4, '-'},
                                               {2, 3, '-'},
                                               {3, 4, '-'}}};

std::span<const TPair> tpl_for(StructureKind kind) {
  switch (kind) {
    case StructureKind::BicoloredP3: return kP3Tpl;
    case StructureKind::MonoP3: return kMonoP3Tpl;
    case StructureKind::MonoK3: return kMonoK3Tpl;
    case StructureKind::BicoloredK3:
    case StructureKind::EndangeredK3: return kBiK3Tpl;
    case StructureKind::LCDiamond: return kLcTpl;
    case StructureKind::LODiamond: return kLoTpl;
    case StructureKind::IIZDiamond: return kIizTpl;
    case StructureKind::CCHourglass: return kHourglassTpl;
    case StructureKind::MultiConflictEdge: break;
  }
  return {};
}

std::uint8_t role_code(char c, Color blue_role) {
  if (c == '-') return 0;
  const Color actual = c == 'b' ? blue_role : other(blue_role);
  return actual == Color::Red ? 1 : 2;
}

std::uint8_t code_of(Color c) { return c == Color::Red ? 1 : 2; }

bool tpl_ok(const ColoredGraph& g, std::span<const TPair> tpl, const Vertex* x, Color blue_role) {
  for (const TPair& p : tpl)
    if (g.code(x[p.a], x[p.b]) != role_code(p.c, blue_role)) return false;
  return true;
}

using Visitor = std::function<bool(ForbiddenStructure&&)>;

// Far endpoint of partner edge f relative to e.
Vertex far_end(VertexPair e, VertexPair f) {
  const Vertex shared = (f.u == e.u || f.u == e.v) ? f.u : f.v;
  return shared == f.u ? f.v : f.u;
}

void partners_into(const ColoredGraph& g, Vertex a, Vertex b, std::vector<VertexPair>& out) {
  const std::uint8_t c = g.code(a, b);
  for (int side = 0; side < 2; ++side) {
    const Vertex x = side == 0 ? a : b;
    const Vertex y = side == 0 ? b : a;
    for (const Neighbor& nb : g.adj(x)) {
      if (nb.vertex == y || code_of(nb.color) == c) continue;
      if (g.code(y, nb.vertex) == 0) out.emplace_back(x, nb.vertex);
    }
  }
  std::sort(out.begin(), out.end());
}

bool scan_multi(const ColoredGraph& g, bool all_pairs, const Visitor& visit) {
  std::vector<VertexPair> partners;
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    for (const Neighbor& nb : g.adj(a)) {
      if (nb.vertex < a) continue;
      partners.clear();
      partners_into(g, a, nb.vertex, partners);
      if (partners.size() < 2) continue;
      const VertexPair e1{a, nb.vertex};
      const std::size_t lim_i = all_pairs ? partners.size() : 1;
      for (std::size_t i = 0; i < lim_i; ++i) {
        const std::size_t lim_j = all_pairs ? partners.size() : i + 2;
        for (std::size_t j = i + 1; j < lim_j; ++j) {
          ForbiddenStructure s;
          s.kind = StructureKind::MultiConflictEdge;
          s.blue_role = nb.color;
          s.edges = {e1, partners[i], partners[j]};
          s.witness = {e1.u, e1.v, far_end(e1, partners[i]), far_end(e1, partners[j])};
          if (visit(std::move(s))) return true;
        }
      }
    }
  }
  return false;
}

// Walks (u, v, w) with {u,v} of color bc, {v,w} of the other color and u, w
// non-adjacent, in lexicographic order over both orientations.
template <class F>
bool scan_p3_both(const ColoredGraph& g, F&& f) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (const Neighbor& uv : g.adj(u)) {
      const Vertex v = uv.vertex;
      const Color bc = uv.color;
      for (const Neighbor& vw : g.adj(v)) {
        if (vw.color == bc || vw.vertex == u || g.code(u, vw.vertex) != 0) continue;
        if (f(u, v, vw.vertex, bc)) return true;
      }
    }
  }
  return false;
}

bool scan_diamond(const ColoredGraph& g, StructureKind kind, const Visitor& visit) {
  auto tpl = tpl_for(kind);
  return scan_p3_both(g, [&](Vertex u, Vertex v, Vertex w, Color bc) {
    for (const Neighbor& uz : g.adj(u)) {
      const Vertex z = uz.vertex;
      if (z == v || z == w) continue;
      const Vertex x[4] = {u, v, w, z};
      if (!tpl_ok(g, tpl, x, bc)) continue;
      ForbiddenStructure s{kind, {u, v, w, z}, bc, {}};
      if (visit(std::move(s))) return true;
    }
    return false;
  });
}

bool scan_hourglass(const ColoredGraph& g, const Visitor& visit) {
  return scan_p3_both(g, [&](Vertex u, Vertex v, Vertex w, Color bc) {
    const std::uint8_t blue = code_of(bc);
    const std::uint8_t red = code_of(other(bc));
    for (const Neighbor& uz1 : g.adj(u)) {
      const Vertex z1 = uz1.vertex;
      if (z1 == v || code_of(uz1.color) != blue || g.code(v, z1) != red || g.code(w, z1) != 0)
        continue;
      for (const Neighbor& vz2 : g.adj(v)) {
        const Vertex z2 = vz2.vertex;
        if (z2 == u || z2 == w || z2 == z1 || code_of(vz2.color) != blue) continue;
        if (g.code(w, z2) != red || g.code(u, z2) != 0 || g.code(z1, z2) != 0) continue;
        ForbiddenStructure s{StructureKind::CCHourglass, {u, v, w, z1, z2}, bc, {}};
        if (visit(std::move(s))) return true;
      }
    }
    return false;
  });
}

bool scan_bicolored_p3(const ColoredGraph& g, const Visitor& visit) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (const Neighbor& a : g.adj(v)) {
      if (a.color != Color::Blue) continue;
      for (const Neighbor& b : g.adj(v)) {
        if (b.color != Color::Red || g.code(a.vertex, b.vertex) != 0) continue;
        ForbiddenStructure s{StructureKind::BicoloredP3, {a.vertex, v, b.vertex}, Color::Blue, {}};
        if (visit(std::move(s))) return true;
      }
    }
  return false;
}

bool scan_mono_p3(const ColoredGraph& g, const Visitor& visit) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto list = g.adj(v);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        if (list[i].color != list[j].color || g.code(list[i].vertex, list[j].vertex) != 0) continue;
        ForbiddenStructure s{
            StructureKind::MonoP3, {list[i].vertex, v, list[j].vertex}, list[i].color, {}};
        if (visit(std::move(s))) return true;
      }
  }
  return false;
}

// Triangles x < y < z in lexicographic order.
template <class F>
bool scan_triangles(const ColoredGraph& g, F&& f) {
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    auto list = g.adj(x);
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].vertex < x) continue;
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const std::uint8_t yz = g.code(list[i].vertex, list[j].vertex);
        if (yz == 0) continue;
        if (f(x, list[i].vertex, list[j].vertex, code_of(list[i].color), code_of(list[j].color), yz))
          return true;
      }
    }
  }
  return false;
}

// Bicolored triangle in role order (apex, v, w) with v < w.
ForbiddenStructure bicolored_k3(Vertex x, Vertex y, Vertex z, std::uint8_t xy, std::uint8_t xz,
                                std::uint8_t yz, StructureKind kind) {
  Vertex apex, v, w;
  std::uint8_t major;
  if (xy == xz) {
    apex = x, v = y, w = z, major = xy;
  } else if (xy == yz) {
    apex = y, v = x, w = z, major = xy;
  } else {
    apex = z, v = x, w = y, major = xz;
  }
  return {kind, {apex, std::min(v, w), std::max(v, w)}, *decode_color(major), {}};
}

bool is_endangered(const ColoredGraph& g, const ForbiddenStructure& k3) {
  const auto& x = k3.witness;
  return partner_count(g, x[0], x[1]) > 0 || partner_count(g, x[0], x[2]) > 0;
}

bool scan(const ColoredGraph& g, StructureKind kind, bool all, const Visitor& visit) {
  switch (kind) {
    case StructureKind::BicoloredP3: return scan_bicolored_p3(g, visit);
    case StructureKind::MonoP3: return scan_mono_p3(g, visit);
    case StructureKind::MonoK3:
      return scan_triangles(g, [&](Vertex x, Vertex y, Vertex z, auto xy, auto xz, auto yz) {
        if (xy != xz || xy != yz) return false;
        return visit({StructureKind::MonoK3, {x, y, z}, *decode_color(xy), {}});
      });
    case StructureKind::BicoloredK3:
    case StructureKind::EndangeredK3:
      return scan_triangles(g, [&](Vertex x, Vertex y, Vertex z, auto xy, auto xz, auto yz) {
        if (xy == xz && xy == yz) return false;
        auto s = bicolored_k3(x, y, z, xy, xz, yz, kind);
        if (kind == StructureKind::EndangeredK3 && !is_endangered(g, s)) return false;
        return visit(std::move(s));
      });
    case StructureKind::LCDiamond:
    case StructureKind::LODiamond:
    case StructureKind::IIZDiamond: return scan_diamond(g, kind, visit);
    case StructureKind::CCHourglass: return scan_hourglass(g, visit);
    case StructureKind::MultiConflictEdge: return scan_multi(g, all, visit);
  }
  return false;
}

}  // namespace

std::string_view kind_name(StructureKind kind) noexcept {
  switch (kind) {
    case StructureKind::BicoloredP3: return "BicoloredP3";
    case StructureKind::MonoP3: return "MonoP3";
    case StructureKind::MonoK3: return "MonoK3";
    case StructureKind::BicoloredK3: return "BicoloredK3";
    case StructureKind::EndangeredK3: return "EndangeredK3";
    case StructureKind::LCDiamond: return "LCDiamond";
    case StructureKind::LODiamond: return "LODiamond";
    case StructureKind::IIZDiamond: return "IIZDiamond";
    case StructureKind::CCHourglass: return "CCHourglass";
    case StructureKind::MultiConflictEdge: return "MultiConflictEdge";
  }
  return "?";
}

std::optional<StructureKind> kind_from_name(std::string_view name) noexcept {
  for (StructureKind k : kAllKinds)
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

std::vector<P3> enumerate_p3(const ColoredGraph& g) {
  std::vector<P3> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (const Neighbor& a : g.adj(v)) {
      if (a.color != Color::Blue) continue;
      for (const Neighbor& b : g.adj(v))
        if (b.color == Color::Red && g.code(a.vertex, b.vertex) == 0)
          out.push_back({a.vertex, v, b.vertex});
    }
  return out;
}

std::size_t count_p3(const ColoredGraph& g) {
  std::size_t count = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (const Neighbor& a : g.adj(v)) {
      if (a.color != Color::Blue) continue;
      for (const Neighbor& b : g.adj(v))
        count += b.color == Color::Red && g.code(a.vertex, b.vertex) == 0;
    }
  return count;
}

std::optional<P3> first_p3(const ColoredGraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (const Neighbor& a : g.adj(v)) {
      if (a.color != Color::Blue) continue;
      for (const Neighbor& b : g.adj(v))
        if (b.color == Color::Red && g.code(a.vertex, b.vertex) == 0)
          return P3{a.vertex, v, b.vertex};
    }
  return std::nullopt;
}

bool is_p3_free(const ColoredGraph& g) { return !first_p3(g).has_value(); }

std::vector<ForbiddenStructure> enumerate_bicolored_p3(const ColoredGraph& g) {
  return find_all(g, StructureKind::BicoloredP3);
}

std::vector<char> p3_vertex_mask(const ColoredGraph& g) {
  std::vector<char> mask(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const P3& p : enumerate_p3(g)) mask[p.u] = mask[p.v] = mask[p.w] = 1;
  return mask;
}

int partner_count(const ColoredGraph& g, Vertex a, Vertex b) noexcept {
  const std::uint8_t c = g.code(a, b);
  int count = 0;
  for (int side = 0; side < 2; ++side) {
    const Vertex x = side == 0 ? a : b;
    const Vertex y = side == 0 ? b : a;
    for (const Neighbor& nb : g.adj(x))
      count += nb.vertex != y && code_of(nb.color) != c && g.code(y, nb.vertex) == 0;
  }
  return count;
}

std::vector<VertexPair> p3_partners(const ColoredGraph& g, VertexPair e) {
  if (!g.has_edge(e.u, e.v))
    throw PreconditionError("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} is not an edge");
  std::vector<VertexPair> out;
  partners_into(g, e.u, e.v, out);
  return out;
}

std::vector<Vertex> p3_witnesses(const ColoredGraph& g, VertexPair e) {
  std::vector<Vertex> out;
  for (const VertexPair& f : p3_partners(g, e)) out.push_back(far_end(e, f));
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_structure(const ColoredGraph& g, const ForbiddenStructure& s) {
  for (Vertex x : s.witness)
    if (x < 0 || x >= g.num_vertices()) return false;
  if (s.kind == StructureKind::MultiConflictEdge) {
    if (s.edges.size() != 3 || s.edges[1] == s.edges[2]) return false;
    const VertexPair e1 = s.edges[0];
    if (!g.has_edge(e1.u, e1.v)) return false;
    auto partners = p3_partners(g, e1);
    for (int i = 1; i <= 2; ++i)
      if (!std::binary_search(partners.begin(), partners.end(), s.edges[i])) return false;
    return true;
  }
  auto tpl = tpl_for(s.kind);
  std::size_t roles = 0;
  for (const TPair& p : tpl) roles = std::max<std::size_t>(roles, std::max(p.a, p.b) + 1);
  if (s.witness.size() != roles) return false;
  std::vector<Vertex> sorted = s.witness;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (!tpl_ok(g, tpl, s.witness.data(), s.blue_role)) return false;
  if (s.kind == StructureKind::EndangeredK3) return is_endangered(g, s);
  return true;
}

std::optional<ForbiddenStructure> find_first(const ColoredGraph& g, StructureKind kind) {
  std::optional<ForbiddenStructure> out;
  scan(g, kind, false, [&](ForbiddenStructure&& s) {
    out = std::move(s);
    return true;
  });
  return out;
}

std::vector<ForbiddenStructure> find_all(const ColoredGraph& g, StructureKind kind) {
  std::vector<ForbiddenStructure> out;
  scan(g, kind, true, [&](ForbiddenStructure&& s) {
    out.push_back(std::move(s));
    return false;
  });
  return out;
}

std::optional<ForbiddenStructure> find_branch_structure(const ColoredGraph& g) {
  for (StructureKind kind : {StructureKind::MultiConflictEdge, StructureKind::LCDiamond,
                             StructureKind::LODiamond, StructureKind::IIZDiamond,
                             StructureKind::CCHourglass})
    if (auto s = find_first(g, kind)) return s;
  return std::nullopt;
}

bool is_nice(const ColoredGraph& g) { return !find_branch_structure(g).has_value(); }

std::optional<ForbiddenStructure> find_endangered_k3(const ColoredGraph& g) {
  return find_first(g, StructureKind::EndangeredK3);
}

bool is_mono_free(const ColoredGraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto list = g.adj(v);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        if (list[i].color != list[j].color) continue;
        const std::uint8_t c = g.code(list[i].vertex, list[j].vertex);
        if (c == 0 || c == code_of(list[i].color)) return false;
      }
  }
  return true;
}

ClassFlags classify(const ColoredGraph& g) {
  ClassFlags f;
  f.bicolored_p3_free = is_p3_free(g);
  f.endangered_k3_free = !find_endangered_k3(g).has_value();
  f.mono_free = is_mono_free(g);
  f.max_degree_le2 = g.max_degree() <= 2;
  if (f.mono_free && (g.max_degree(Color::Blue) > 2 || g.max_degree(Color::Red) > 2))
    throw InvariantError("mono-free graph with a color degree above two");
  return f;
}

std::vector<P3> greedy_p3_packing(const ColoredGraph& g) {
  EdgeIds ids(g);
  std::vector<char> used(static_cast<std::size_t>(ids.size()), 0);
  std::vector<P3> out;
  for (const P3& p : enumerate_p3(g)) {
    const int a = ids.id(p.u, p.v);
    const int b = ids.id(p.v, p.w);
    if (used[a] || used[b]) continue;
    used[a] = used[b] = 1;
    out.push_back(p);
  }
  return out;
}

}  // namespace bpd

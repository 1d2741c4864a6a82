#include <algorithm>
#include <string>

#include "bpd/detect.hpp"
#include "bpd/errors.hpp"
#include "bpd/oracle.hpp"
#include "bpd/solve.hpp"
#include "solve_internal.hpp"

namespace bpd {

namespace {

using detail::check_yes;
using detail::Stopwatch;

ColoredGraph without(const ColoredGraph& g, VertexPair e) {
  return delete_edges(g, std::span<const VertexPair>(&e, 1));
}

std::string witness_text(const ForbiddenStructure& s) {
  std::string out(kind_name(s.kind));
  out += " (";
  for (std::size_t i = 0; i < s.witness.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.witness[i]);
  }
  return out + ")";
}

SolveResult decide(Method m, std::int64_t k, DeletionSet minimum) {
  SolveResult r;
  r.method = m;
  r.k = k;
  r.yes = static_cast<std::int64_t>(minimum.size()) <= k;
  if (r.yes) r.solution = std::move(minimum);
  return r;
}

void oracle_into(const ColoredGraph& g, const std::vector<Vertex>& comp, DeletionSet& out) {
  auto sub = induced_subgraph(g, comp);
  const OracleResult r = oracle_min_deletions(sub.graph);
  for (const VertexPair& p : r.witness) out.emplace_back(sub.to_original[p.u], sub.to_original[p.v]);
}

struct PathEdge {
  VertexPair e;
  Color c;
};

// Left-to-right greedy: at the first edge in a P3, delete the next edge and
// resume after it.
void greedy_path(const std::vector<PathEdge>& path, DeletionSet& out) {
  std::size_t i = 0;
  while (i + 1 < path.size()) {
    if (path[i].c != path[i + 1].c) {
      out.push_back(path[i + 1].e);
      i += 2;
    } else {
      ++i;
    }
  }
}

// Edges of a path or cycle component in walk order starting at `start`.
std::vector<PathEdge> walk(const ColoredGraph& g, Vertex start, bool cycle) {
  std::vector<PathEdge> out;
  Vertex prev = -1;
  Vertex cur = start;
  while (true) {
    std::optional<Neighbor> next;
    for (const Neighbor& nb : g.adj(cur))
      if (nb.vertex != prev) {
        next = nb;
        break;
      }
    if (!next) break;
    out.push_back({VertexPair(cur, next->vertex), next->color});
    prev = cur;
    cur = next->vertex;
    if (cycle && cur == start) break;
  }
  return out;
}

}  // namespace

DeletionSet degree_two_minimum(const ColoredGraph& g) {
  if (g.max_degree() > 2)
    throw PreconditionError("degree-two solver needs maximum degree <= 2, graph has " +
                            std::to_string(g.max_degree()));
  DeletionSet out;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 3) continue;
    const bool cycle = std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return g.degree(v) == 2; });
    if (!cycle) {
      Vertex end = comp.front();
      for (Vertex v : comp)
        if (g.degree(v) == 1) {
          end = v;
          break;
        }
      greedy_path(walk(g, end, false), out);
      continue;
    }
    if (comp.size() <= 5) {
      oracle_into(g, comp, out);
      continue;
    }
    const std::vector<PathEdge> ring = walk(g, comp.front(), true);
    const std::size_t L = ring.size();
    auto at = [&](std::size_t i) -> const PathEdge& { return ring[i % L]; };
    auto arc = [&](std::size_t first, std::size_t count) {
      std::vector<PathEdge> p;
      for (std::size_t j = 0; j < count; ++j) p.push_back(at(first + j));
      return p;
    };
    bool done = false;
    // Three same-colored edges in a row: the middle one is in no P3.
    for (std::size_t i = 0; i < L && !done; ++i) {
      if (at(i + L - 1).c == at(i).c && at(i).c == at(i + 1).c) {
        greedy_path(arc(i + 1, L - 1), out);
        done = true;
      }
    }
    // Exactly two in a row: both outer neighbors must go.
    for (std::size_t i = 0; i < L && !done; ++i) {
      if (at(i).c == at(i + 1).c) {
        out.push_back(at(i + L - 1).e);
        out.push_back(at(i + 2).e);
        greedy_path(arc(i + 3, L - 4), out);
        done = true;
      }
    }
    if (!done)
      for (const PathEdge& pe : ring)
        if (pe.c == Color::Blue) out.push_back(pe.e);
  }
  canonicalize(out);
  return out;
}

DeletionSet nice_witness(const ColoredGraph& g) {
  // One edge per P3, always one whose deletion removes exactly that P3 and
  // keeps the graph nice; blue is tried first.
  ColoredGraph cur = g;
  DeletionSet sol;
  std::size_t p = count_p3(cur);
  while (p > 0) {
    const P3 t = *first_p3(cur);
    bool done = false;
    for (VertexPair e : {t.blue_edge(), t.red_edge()}) {
      ColoredGraph next = without(cur, e);
      if (count_p3(next) + 1 == p && is_nice(next)) {
        cur = std::move(next);
        sol.push_back(e);
        --p;
        done = true;
        break;
      }
    }
    if (!done)
      throw InvariantError("no edge of P3 " + std::to_string(t.u) + "-" + std::to_string(t.v) +
                           "-" + std::to_string(t.w) + " keeps the graph nice");
  }
  canonicalize(sol);
  return sol;
}

SolveResult solve_nice(const ColoredGraph& g, std::int64_t k) {
  Stopwatch clock;
  if (auto s = find_branch_structure(g))
    throw PreconditionError("graph is not nice: " + witness_text(*s));
  SolveResult r;
  r.method = Method::Nice;
  r.k = k;
  r.stats.nodes_expanded = 1;
  r.stats.nice_leaves = 1;
  r.yes = static_cast<std::int64_t>(count_p3(g)) <= k;
  if (r.yes) r.solution = nice_witness(g);
  r.stats.time_ms = clock.ms();
  check_yes(g, r);
  return r;
}

ConflictGraph build_conflict_graph(const ColoredGraph& g) {
  ConflictGraph cg;
  const EdgeIds ids(g);
  std::vector<int> local(static_cast<std::size_t>(ids.size()), -1);
  for (const Edge& e : g.edges()) {
    auto& side = e.color == Color::Red ? cg.red : cg.blue;
    local[ids.id(e.u(), e.v())] = static_cast<int>(side.size());
    side.push_back(e.ends);
  }
  cg.graph.left = static_cast<int>(cg.red.size());
  cg.graph.right = static_cast<int>(cg.blue.size());
  cg.graph.adj.assign(cg.red.size(), {});
  for (const P3& p : enumerate_p3(g)) {
    cg.graph.adj[local[ids.id(p.v, p.w)]].push_back(local[ids.id(p.u, p.v)]);
    ++cg.conflicts;
  }
  for (auto& list : cg.graph.adj) std::sort(list.begin(), list.end());
  return cg;
}

DeletionSet conflict_cover(const ConflictGraph& cg) {
  const BipartiteCover cover = minimum_vertex_cover(cg.graph);
  DeletionSet out;
  for (int i : cover.left) out.push_back(cg.red[i]);
  for (int i : cover.right) out.push_back(cg.blue[i]);
  canonicalize(out);
  return out;
}

SolveResult solve_endangered_free(const Instance& inst) {
  Stopwatch clock;
  if (auto s = find_endangered_k3(inst.graph))
    throw PreconditionError("vertex-cover solver needs a graph without endangered K3, found " +
                            witness_text(*s));
  SolveResult r = decide(Method::VertexCover, inst.k, conflict_cover(build_conflict_graph(inst.graph)));
  r.stats.time_ms = clock.ms();
  check_yes(inst.graph, r);
  return r;
}

SolveResult solve_degree_two(const Instance& inst) {
  Stopwatch clock;
  SolveResult r = decide(Method::DegreeTwo, inst.k, degree_two_minimum(inst.graph));
  r.stats.time_ms = clock.ms();
  check_yes(inst.graph, r);
  return r;
}

DeletionSet mono_free_minimum(const ColoredGraph& g) {
  if (auto s = find_first(g, StructureKind::MonoP3))
    throw PreconditionError("graph is not mono-free: " + witness_text(*s));
  if (auto s = find_first(g, StructureKind::MonoK3))
    throw PreconditionError("graph is not mono-free: " + witness_text(*s));
  if (g.max_degree(Color::Blue) > 2 || g.max_degree(Color::Red) > 2)
    throw InvariantError("mono-free graph with a color degree above two");

  DeletionSet out;
  ColoredGraph h = g;
  // Small and P3-free components are settled here and their edges dropped so
  // that only large components reach the degree-two stage.
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    const bool free = is_p3_free(sub.graph);
    if (!free && comp.size() > 5) continue;
    if (!free) oracle_into(g, comp, out);
    const auto inner = edges_within(g, comp);
    std::vector<VertexPair> pairs;
    for (const Edge& e : inner) pairs.push_back(e.ends);
    h = delete_edges(h, std::span<const VertexPair>(pairs));
  }
  // Every remaining degree-three vertex must be the center of a paw whose
  // pendant edge is a bridge in a P3 with a P3-free triangle side.
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    const int d = h.degree(v);
    if (d > 3) throw InvariantError("vertex " + std::to_string(v) + " keeps degree " + std::to_string(d));
    if (d != 3) continue;
    auto nb = h.adj(v);
    std::optional<Vertex> t;
    int adjacent_pairs = 0;
    for (int i = 0; i < 3; ++i) {
      const Vertex a = nb[(i + 1) % 3].vertex;
      const Vertex b = nb[(i + 2) % 3].vertex;
      if (h.code(a, b) != 0) {
        ++adjacent_pairs;
        t = nb[i].vertex;
      }
    }
    bool paw = adjacent_pairs == 1;
    if (paw)
      for (const Neighbor& x : nb)
        if (x.vertex != *t && h.degree(x.vertex) != 2) paw = false;
    if (!paw)
      throw InvariantError("degree-3 vertex " + std::to_string(v) +
                           " is not the center of a paw after small components were removed");
    const VertexPair bridge(v, *t);
    out.push_back(bridge);
    h = without(h, bridge);
  }
  DeletionSet rest = degree_two_minimum(h);
  out.insert(out.end(), rest.begin(), rest.end());
  canonicalize(out);
  return out;
}

SolveResult solve_mono_free(const Instance& inst) {
  Stopwatch clock;
  SolveResult r = decide(Method::MonoFree, inst.k, mono_free_minimum(inst.graph));
  r.stats.time_ms = clock.ms();
  check_yes(inst.graph, r);
  return r;
}

SolveResult solve_oracle(const Instance& inst) {
  Stopwatch clock;
  SolveResult r;
  r.method = Method::Oracle;
  r.k = inst.k;
  const OracleResult o = oracle_min_deletions(inst.graph, inst.k);
  r.stats.nodes_expanded = o.nodes;
  r.yes = o.optimum.has_value();
  if (r.yes) r.solution = o.witness;
  r.stats.time_ms = clock.ms();
  check_yes(inst.graph, r);
  return r;
}

}  // namespace bpd

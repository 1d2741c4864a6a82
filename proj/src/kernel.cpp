#include "bpd/kernel.hpp"

#include <algorithm>
#include <string>

#include "bpd/detect.hpp"
#include "bpd/errors.hpp"
#include "bpd/oracle.hpp"

namespace bpd {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Drops the marked vertices and closes the batch with a Relabel step.
void drop_vertices(Instance& inst, const std::vector<char>& removed, KernelTrace& trace) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < inst.graph.num_vertices(); ++v)
    if (!removed[v]) keep.push_back(v);
  const Vertex old_n = inst.graph.num_vertices();
  inst.graph = induced_subgraph(inst.graph, keep).graph;
  trace.steps.push_back(Relabel{std::move(keep), old_n});
}

ColoredGraph without(const ColoredGraph& g, VertexPair e) {
  return delete_edges(g, std::span<const VertexPair>(&e, 1));
}

// Vertices reachable from `start` without using the edge {start, blocked}.
std::vector<Vertex> side_of(const ColoredGraph& g, Vertex start, Vertex blocked) {
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<Vertex> order{start};
  seen[start] = 1;
  for (std::size_t h = 0; h < order.size(); ++h) {
    const Vertex x = order[h];
    for (const Neighbor& nb : g.adj(x)) {
      if (seen[nb.vertex] || (x == start && nb.vertex == blocked)) continue;
      seen[nb.vertex] = 1;
      order.push_back(nb.vertex);
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

bool has_p3_partner_through(const ColoredGraph& g, Vertex u, Vertex v) {
  const std::uint8_t c = g.code(u, v);
  for (const Neighbor& nb : g.adj(v))
    if (nb.vertex != u && (nb.color == Color::Red ? 1 : 2) != c && g.code(u, nb.vertex) == 0)
      return true;
  return false;
}

}  // namespace

std::int64_t KernelTrace::cost() const {
  std::int64_t total = 0;
  for (const KernelStep& step : steps)
    total += std::visit(Overloaded{
                            [](const SolvedSmallComponent& s) { return s.cost; },
                            [](const BridgeRule&) { return std::int64_t{1}; },
                            [](const ForcedEdgeDeletion&) { return std::int64_t{1}; },
                            [](const TrivialYes& s) {
                              return static_cast<std::int64_t>(s.deletions.size());
                            },
                            [](const auto&) { return std::int64_t{0}; },
                        },
                        step);
  return total;
}

void KernelTrace::append(const KernelTrace& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

std::string_view step_name(const KernelStep& step) {
  return std::visit(Overloaded{
                        [](const RemovedFreeComponent&) { return std::string_view("RemovedFreeComponent"); },
                        [](const SolvedSmallComponent&) { return std::string_view("SolvedSmallComponent"); },
                        [](const BridgeRule&) { return std::string_view("BridgeRule"); },
                        [](const ForcedEdgeDeletion&) { return std::string_view("ForcedEdgeDeletion"); },
                        [](const RemovedVertex&) { return std::string_view("RemovedVertex"); },
                        [](const TrivialYes&) { return std::string_view("TrivialYes"); },
                        [](const Relabel&) { return std::string_view("Relabel"); },
                    },
                    step);
}

RuleResult rr1_components(const Instance& inst) {
  RuleResult out{inst, {}, false};
  const ColoredGraph& g = inst.graph;
  std::vector<char> removed(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    if (is_p3_free(sub.graph)) {
      out.trace.steps.push_back(RemovedFreeComponent{comp});
    } else if (comp.size() <= 5) {
      const OracleResult r = oracle_min_deletions(sub.graph);
      if (!r.optimum) throw InvariantError("uncapped oracle returned no optimum");
      DeletionSet dels;
      for (const VertexPair& p : r.witness) dels.emplace_back(sub.to_original[p.u], sub.to_original[p.v]);
      std::sort(dels.begin(), dels.end());
      out.instance.k -= *r.optimum;
      out.trace.steps.push_back(SolvedSmallComponent{comp, std::move(dels), *r.optimum});
    } else {
      continue;
    }
    for (Vertex v : comp) removed[v] = 1;
    out.applied = true;
  }
  if (out.applied) drop_vertices(out.instance, removed, out.trace);
  return out;
}

RuleResult rr2_bridge(const Instance& inst) {
  RuleResult out{inst, {}, false};
  const ColoredGraph& g = inst.graph;
  for (const VertexPair& br : bridges(g)) {
    for (int side = 0; side < 2; ++side) {
      const Vertex u = side == 0 ? br.u : br.v;
      const Vertex v = side == 0 ? br.v : br.u;
      if (!has_p3_partner_through(g, u, v)) continue;
      const std::vector<Vertex> comp = side_of(g, v, u);
      if (!is_p3_free(induced_subgraph(g, comp).graph)) continue;
      out.instance.graph = without(g, br);
      out.instance.k -= 1;
      out.trace.steps.push_back(BridgeRule{br, comp});
      std::vector<char> removed(static_cast<std::size_t>(g.num_vertices()), 0);
      for (Vertex x : comp) removed[x] = 1;
      drop_vertices(out.instance, removed, out.trace);
      out.applied = true;
      return out;
    }
  }
  return out;
}

RuleResult rr2_bridge_exhaustive(const Instance& inst) {
  RuleResult out{inst, {}, false};
  while (out.instance.k >= 0) {
    RuleResult step = rr2_bridge(out.instance);
    if (!step.applied) break;
    out.instance = std::move(step.instance);
    out.trace.append(step.trace);
    out.applied = true;
  }
  return out;
}

RuleResult rr3_heavy_edge(const Instance& inst) {
  RuleResult out{inst, {}, false};
  bool again = true;
  while (again && out.instance.k >= 0) {
    again = false;
    const ColoredGraph& g = out.instance.graph;
    for (Vertex a = 0; a < g.num_vertices() && !again; ++a)
      for (const Neighbor& nb : g.adj(a)) {
        if (nb.vertex < a || partner_count(g, a, nb.vertex) <= out.instance.k) continue;
        const VertexPair e{a, nb.vertex};
        out.instance.graph = without(g, e);
        out.instance.k -= 1;
        out.trace.steps.push_back(ForcedEdgeDeletion{e});
        out.applied = again = true;
        break;
      }
  }
  return out;
}

RuleResult rr4_far_vertex(const Instance& inst) {
  RuleResult out{inst, {}, false};
  const ColoredGraph& g = inst.graph;
  const std::vector<char> hot = p3_vertex_mask(g);
  std::vector<char> removed(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    bool near = hot[v];
    for (const Neighbor& nb : g.adj(v)) near = near || hot[nb.vertex];
    if (near) continue;
    removed[v] = 1;
    out.trace.steps.push_back(RemovedVertex{v});
    out.applied = true;
  }
  if (out.applied) drop_vertices(out.instance, removed, out.trace);
  return out;
}

std::optional<DeletionSet> trivial_yes_check(const Instance& inst) {
  const auto blue = static_cast<std::int64_t>(inst.graph.num_edges(Color::Blue));
  const auto red = static_cast<std::int64_t>(inst.graph.num_edges(Color::Red));
  if (std::min(blue, red) > inst.k) return std::nullopt;
  return color_class(inst.graph, blue <= red ? Color::Blue : Color::Red);
}

std::int64_t kernel_vertex_bound(std::int64_t k, std::int64_t max_degree) {
  if (k <= 0) return 0;
  const std::int64_t m = std::min(k, 2 * max_degree);
  return 6 * k * max_degree * m + 6 * k * m;
}

KernelResult kernelize(const Instance& inst, const KernelOptions& options) {
  KernelResult out;
  Instance cur = inst;
  auto absorb = [&](RuleResult&& r) {
    if (!r.applied) return false;
    cur = std::move(r.instance);
    out.trace.append(r.trace);
    return true;
  };
  while (cur.k >= 0) {
    bool changed = false;
    if (options.trivial_yes && !is_p3_free(cur.graph)) {
      if (auto cls = trivial_yes_check(cur)) {
        const Color c = cur.graph.num_edges(Color::Blue) <= cur.graph.num_edges(Color::Red)
                            ? Color::Blue
                            : Color::Red;
        cur.graph = delete_edges(cur.graph, std::span<const VertexPair>(*cls));
        cur.k -= static_cast<std::int64_t>(cls->size());
        out.trace.steps.push_back(TrivialYes{c, std::move(*cls)});
        out.trivially_solved = true;
        changed = true;
      }
    }
    changed |= absorb(rr3_heavy_edge(cur));
    if (cur.k < 0) break;
    changed |= absorb(rr4_far_vertex(cur));
    if (options.bridge_rule) changed |= absorb(rr2_bridge_exhaustive(cur));
    if (cur.k < 0) break;
    changed |= absorb(rr1_components(cur));
    if (!changed) break;
  }
  out.kernel = std::move(cur);
  out.no_instance = out.kernel.k < 0;
  out.vertex_bound = kernel_vertex_bound(out.kernel.k, out.kernel.graph.max_degree());
  out.within_bound = out.kernel.graph.num_vertices() <= out.vertex_bound;
  return out;
}

DeletionSet lift_solution(const KernelTrace& trace, const DeletionSet& kernel_solution) {
  DeletionSet sol = kernel_solution;
  auto add = [&](const DeletionSet& s) { sol.insert(sol.end(), s.begin(), s.end()); };
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    std::visit(Overloaded{
                   [&](const Relabel& r) {
                     const auto size = static_cast<Vertex>(r.new_to_old.size());
                     for (VertexPair& p : sol) {
                       if (p.u < 0 || p.v >= size)
                         throw InvariantError("solution pair outside relabel range");
                       p = VertexPair(r.new_to_old[p.u], r.new_to_old[p.v]);
                     }
                   },
                   [&](const SolvedSmallComponent& s) { add(s.deletions); },
                   [&](const BridgeRule& s) { sol.push_back(s.bridge); },
                   [&](const ForcedEdgeDeletion& s) { sol.push_back(s.edge); },
                   [&](const TrivialYes& s) { add(s.deletions); },
                   [](const auto&) {},
               },
               *it);
  }
  const std::size_t before = sol.size();
  canonicalize(sol);
  if (sol.size() != before) throw InvariantError("lifted solution repeats an edge");
  return sol;
}

Instance replay(const Instance& original, const KernelTrace& trace) {
  Instance cur = original;
  std::vector<char> pending(static_cast<std::size_t>(cur.graph.num_vertices()), 0);
  auto mark = [&](const std::vector<Vertex>& vs) {
    for (Vertex v : vs) {
      cur.graph.check_vertex(v);
      pending[v] = 1;
    }
  };
  auto erase = [&](const DeletionSet& s) { cur.graph = delete_edges(cur.graph, std::span<const VertexPair>(s)); };
  for (const KernelStep& step : trace.steps) {
    std::visit(Overloaded{
                   [&](const RemovedFreeComponent& s) { mark(s.vertices); },
                   [&](const SolvedSmallComponent& s) {
                     erase(s.deletions);
                     cur.k -= s.cost;
                     mark(s.vertices);
                   },
                   [&](const BridgeRule& s) {
                     erase({s.bridge});
                     cur.k -= 1;
                     mark(s.removed);
                   },
                   [&](const ForcedEdgeDeletion& s) {
                     erase({s.edge});
                     cur.k -= 1;
                   },
                   [&](const RemovedVertex& s) { mark({s.vertex}); },
                   [&](const TrivialYes& s) {
                     erase(s.deletions);
                     cur.k -= static_cast<std::int64_t>(s.deletions.size());
                   },
                   [&](const Relabel& r) {
                     if (r.old_n != cur.graph.num_vertices())
                       throw InvariantError("relabel step expects " + std::to_string(r.old_n) +
                                            " vertices, have " +
                                            std::to_string(cur.graph.num_vertices()));
                     std::vector<Vertex> keep;
                     for (Vertex v = 0; v < cur.graph.num_vertices(); ++v)
                       if (!pending[v]) keep.push_back(v);
                     if (keep != r.new_to_old)
                       throw InvariantError("relabel map disagrees with removed vertices");
                     cur.graph = induced_subgraph(cur.graph, keep).graph;
                     pending.assign(static_cast<std::size_t>(cur.graph.num_vertices()), 0);
                   },
               },
               step);
  }
  if (std::find(pending.begin(), pending.end(), 1) != pending.end())
    throw InvariantError("trace ends with unapplied vertex removals");
  return cur;
}

}  // namespace bpd

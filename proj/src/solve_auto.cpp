#include <algorithm>

#include "bpd/detect.hpp"
#include "bpd/errors.hpp"
#include "bpd/kernel.hpp"
#include "bpd/oracle.hpp"
#include "bpd/solve.hpp"
#include "solve_internal.hpp"

namespace bpd {

namespace {

using detail::check_yes;
using detail::Stopwatch;

constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::Auto, "auto"},         {Method::Branch, "branch"},
    {Method::VertexCover, "vc"},    {Method::DegreeTwo, "deg2"},
    {Method::MonoFree, "monofree"}, {Method::Oracle, "oracle"},
    {Method::Nice, "nice"},         {Method::KernelOnly, "kernel-only"},
    {Method::TrivialYes, "trivial-yes"},
};

std::int64_t class_bound(const ColoredGraph& g) {
  return static_cast<std::int64_t>(std::min(g.num_edges(Color::Red), g.num_edges(Color::Blue)));
}

bool used_trivial_yes(const KernelTrace& t) {
  return std::any_of(t.steps.begin(), t.steps.end(),
                     [](const KernelStep& s) { return std::holds_alternative<TrivialYes>(s); });
}

Method pick_method(const ColoredGraph& g) {
  const ClassFlags f = classify(g);
  if (f.mono_free) return Method::MonoFree;
  if (f.max_degree_le2) return Method::DegreeTwo;
  if (f.endangered_k3_free) return Method::VertexCover;
  return Method::Branch;
}

SolveResult minimum_by(Method m, const ColoredGraph& g) {
  SolveResult r;
  r.method = m;
  DeletionSet s;
  switch (m) {
    case Method::VertexCover:
      if (auto e = find_endangered_k3(g))
        throw PreconditionError("vertex-cover solver needs a graph without endangered K3");
      s = conflict_cover(build_conflict_graph(g));
      break;
    case Method::DegreeTwo: s = degree_two_minimum(g); break;
    case Method::MonoFree: s = mono_free_minimum(g); break;
    case Method::Oracle: {
      const OracleResult o = oracle_min_deletions(g);
      r.stats.nodes_expanded = o.nodes;
      s = o.witness;
      break;
    }
    case Method::Nice:
      if (find_branch_structure(g)) throw PreconditionError("graph is not nice");
      s = nice_witness(g);
      break;
    default: throw InvariantError("minimum_by called with a search method");
  }
  r.yes = true;
  r.k = static_cast<std::int64_t>(s.size());
  r.optimum = r.k;
  r.solution = std::move(s);
  return r;
}

SolveResult optimize_branching(const ColoredGraph& g, const SolveOptions& options) {
  SearchStats total;
  for (std::int64_t k = lower_bound(g, options.block_bound);; ++k) {
    SolveResult r = solve_branching({g, k}, options);
    total.merge(r.stats);
    total.time_ms += r.stats.time_ms;
    if (r.yes) {
      r.stats = total;
      r.optimum = k;
      return r;
    }
    if (k > class_bound(g)) throw InvariantError("branching found no solution within the color-class bound");
  }
}

}  // namespace

std::string_view method_name(Method m) noexcept {
  for (auto [mm, name] : kMethodNames)
    if (mm == m) return name;
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) noexcept {
  for (auto [mm, n] : kMethodNames)
    if (n == name) return mm;
  return std::nullopt;
}

SolveResult solve_auto(const Instance& inst, const SolveOptions& options) {
  Stopwatch clock;
  SolveResult r;
  r.method = Method::KernelOnly;
  r.k = inst.k;
  if (inst.k < 0) {
    r.stats.time_ms = clock.ms();
    return r;
  }
  if (is_p3_free(inst.graph)) {
    r.yes = true;
    r.solution = DeletionSet{};
  } else if (auto cls = trivial_yes_check(inst)) {
    r.method = Method::TrivialYes;
    r.yes = true;
    r.solution = std::move(*cls);
  } else {
    const KernelResult kr = kernelize(inst);
    if (kr.no_instance) {
      r.yes = false;
    } else if (is_p3_free(kr.kernel.graph)) {
      r.method = used_trivial_yes(kr.trace) ? Method::TrivialYes : Method::KernelOnly;
      r.yes = true;
      r.solution = lift_solution(kr.trace, {});
    } else {
      const Method m = pick_method(kr.kernel.graph);
      SolveResult inner = solve_with(m, kr.kernel, options);
      r.method = m;
      r.stats = inner.stats;
      r.yes = inner.yes;
      if (inner.yes) r.solution = lift_solution(kr.trace, *inner.solution);
    }
  }
  r.stats.time_ms = clock.ms();
  check_yes(inst.graph, r);
  return r;
}

SolveResult solve_with(Method method, const Instance& inst, const SolveOptions& options) {
  switch (method) {
    case Method::Auto: return solve_auto(inst, options);
    case Method::Branch: return solve_branching(inst, options);
    case Method::VertexCover: return solve_endangered_free(inst);
    case Method::DegreeTwo: return solve_degree_two(inst);
    case Method::MonoFree: return solve_mono_free(inst);
    case Method::Oracle: return solve_oracle(inst);
    case Method::Nice: return solve_nice(inst.graph, inst.k);
    default: throw PreconditionError("method '" + std::string(method_name(method)) + "' cannot be requested");
  }
}

SolveResult optimize(Method method, const ColoredGraph& g, const SolveOptions& options) {
  Stopwatch clock;
  SolveResult r;
  switch (method) {
    case Method::Branch: r = optimize_branching(g, options); break;
    case Method::Auto: {
      if (is_p3_free(g)) {
        r.method = Method::KernelOnly;
        r.yes = true;
        r.solution = DeletionSet{};
        break;
      }
      // Kernelize at the color-class bound: every rule then keeps the
      // optimum shifted by exactly the trace cost.
      KernelOptions ko;
      ko.trivial_yes = false;
      const KernelResult kr = kernelize({g, class_bound(g)}, ko);
      if (kr.no_instance) throw InvariantError("kernel rejected the color-class budget");
      DeletionSet kernel_solution;
      if (is_p3_free(kr.kernel.graph)) {
        r.method = Method::KernelOnly;
      } else {
        const Method m = pick_method(kr.kernel.graph);
        SolveResult inner = m == Method::Branch ? optimize_branching(kr.kernel.graph, options)
                                                : minimum_by(m, kr.kernel.graph);
        r.method = m;
        r.stats = inner.stats;
        kernel_solution = *inner.solution;
      }
      r.yes = true;
      r.solution = lift_solution(kr.trace, kernel_solution);
      break;
    }
    case Method::VertexCover:
    case Method::DegreeTwo:
    case Method::MonoFree:
    case Method::Oracle:
    case Method::Nice: r = minimum_by(method, g); break;
    default: throw PreconditionError("method '" + std::string(method_name(method)) + "' cannot be requested");
  }
  r.k = static_cast<std::int64_t>(r.solution->size());
  r.optimum = r.k;
  r.stats.time_ms = clock.ms();
  check_yes(g, r);
  return r;
}

}  // namespace bpd

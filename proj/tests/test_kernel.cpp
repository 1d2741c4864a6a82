#include <algorithm>
#include <random>

#include "bpd/detect.hpp"
#include "bpd/generate.hpp"
#include "bpd/kernel.hpp"
#include "bpd/oracle.hpp"
#include "doctest.h"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace bpd;
using fixtures::graph_of;

namespace {

bool yes(const ColoredGraph& g, std::int64_t k) {
  if (k < 0) return false;
  return oracle_min_deletions(g, k).optimum.has_value();
}

bool yes(const Instance& inst) { return yes(inst.graph, inst.k); }

template <class Rule>
void check_safe(Rule rule, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int fired = 0;
  for (int t = 0; t < 250; ++t) {
    const ColoredGraph g = brute::random_graph(rng, 3 + static_cast<Vertex>(rng() % 7), 0.25 + 0.1 * (t % 4));
    const Instance inst{g, static_cast<std::int64_t>(rng() % (g.num_edges() + 1))};
    const RuleResult r = rule(inst);
    if (r.applied) ++fired;
    CHECK(yes(inst) == yes(r.instance));
    CHECK(inst.k - r.instance.k == r.trace.cost());
    CHECK(replay(inst, r.trace) == r.instance);
    if (r.instance.k >= 0) {
      const OracleResult o = oracle_min_deletions(r.instance.graph, r.instance.k);
      if (o.optimum) {
        const DeletionSet lifted = lift_solution(r.trace, o.witness);
        CHECK(verify_solution(g, lifted, inst.k).ok);
      }
    }
  }
  CHECK(fired > 0);
}

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("RR1 examples") {
    const ColoredGraph mono = graph_of(3, {{0, 1, 'b'}, {1, 2, 'b'}, {0, 2, 'b'}});
    RuleResult r = rr1_components({mono, 2});
    CHECK(r.instance.graph.num_vertices() == 0);
    CHECK(r.instance.k == 2);

    r = rr1_components({fixtures::single_p3(), 2});
    CHECK(r.instance.graph.num_vertices() == 0);
    CHECK(r.instance.k == 1);
    CHECK(lift_solution(r.trace, {}).size() == 1);

    const ColoredGraph bk3 = graph_of(3, {{0, 1, 'b'}, {1, 2, 'b'}, {0, 2, 'r'}});
    r = rr1_components({bk3, 0});
    CHECK(r.instance.graph.num_vertices() == 0);
    CHECK(r.instance.k == 0);

    r = rr1_components({fixtures::disjoint_p3s(3), 1});
    CHECK(r.instance.k < 0);
  }

  TEST_CASE("RR2 examples") {
    RuleResult r = rr2_bridge({fixtures::single_p3(), 1});
    CHECK(r.applied);
    CHECK(r.instance.k == 0);
    CHECK(is_p3_free(r.instance.graph));
    CHECK(lift_solution(r.trace, {}).size() == 1);

    const ColoredGraph path = fixtures::path_of({Color::Blue, Color::Red, Color::Blue, Color::Red});
    REQUIRE(is_p3_free(path) == false);
    r = rr2_bridge({path, 4});
    CHECK(r.applied);
    CHECK(r.instance.k == 3);

    r = rr2_bridge({gadget(GadgetKind::AlternatingCycle, 6), 3});
    CHECK_FALSE(r.applied);
  }

  TEST_CASE("RR3 examples") {
    const ColoredGraph star = graph_of(4, {{0, 1, 'b'}, {1, 2, 'r'}, {1, 3, 'r'}});
    RuleResult r = rr3_heavy_edge({star, 1});
    CHECK(r.applied);
    CHECK(r.instance.k == 0);
    CHECK_FALSE(r.instance.graph.has_edge(0, 1));
    CHECK_FALSE(rr3_heavy_edge({star, 2}).applied);
    r = rr3_heavy_edge({gadget(GadgetKind::Variable), 3});
    CHECK(r.applied);
    CHECK(r.instance.k < 3);
  }

  TEST_CASE("RR4 examples") {
    ColoredGraph g = graph_of(4, {{0, 1, 'b'}, {1, 2, 'r'}});
    RuleResult r = rr4_far_vertex({g, 1});
    CHECK(r.instance.graph.num_vertices() == 3);

    g = graph_of(6, {{0, 1, 'b'}, {1, 2, 'r'}, {3, 4, 'b'}, {4, 5, 'b'}, {3, 5, 'b'}});
    r = rr4_far_vertex({g, 1});
    CHECK(r.instance.graph.num_vertices() == 3);

    // 0-1-2 is the P3; 3 hangs off 2 by a red edge (distance 1), 4 off 3
    // (distance 2). 2-3 forms a mono P3 with 1-2 so 3 is no P3 vertex.
    g = graph_of(5, {{0, 1, 'b'}, {1, 2, 'r'}, {2, 3, 'r'}, {3, 4, 'r'}});
    REQUIRE(p3_vertex_mask(g) == std::vector<char>{1, 1, 1, 0, 0});
    r = rr4_far_vertex({g, 1});
    CHECK(r.instance.graph.num_vertices() == 4);
    CHECK(r.instance.graph.num_edges() == 3);
  }

  TEST_CASE("trivial yes") {
    const ColoredGraph var = gadget(GadgetKind::Variable);
    auto s = trivial_yes_check({var, 8});
    REQUIRE(s);
    CHECK(*s == color_class(var, Color::Blue));

    std::vector<Edge> edges;
    for (Vertex i = 0; i < 3; ++i) edges.emplace_back(0, 1 + i, Color::Blue);
    for (Vertex i = 0; i < 10; ++i) edges.emplace_back(0, 4 + i, Color::Red);
    const ColoredGraph g(14, edges);
    s = trivial_yes_check({g, 3});
    REQUIRE(s);
    CHECK(*s == color_class(g, Color::Blue));

    std::vector<Edge> five;
    for (Vertex i = 0; i < 5; ++i) {
      five.emplace_back(0, 1 + i, Color::Blue);
      five.emplace_back(0, 6 + i, Color::Red);
    }
    CHECK_FALSE(trivial_yes_check({ColoredGraph(11, five), 4}));
  }

  TEST_CASE("rules are safe") {
    check_safe(rr1_components, 1);
    check_safe(rr2_bridge, 2);
    check_safe(rr2_bridge_exhaustive, 3);
    check_safe(rr3_heavy_edge, 4);
    check_safe(rr4_far_vertex, 5);
  }

  TEST_CASE("kernelize examples") {
    const ColoredGraph mono = graph_of(4, {{0, 1, 'b'}, {1, 2, 'b'}, {2, 3, 'b'}});
    KernelResult kr = kernelize({mono, 0});
    CHECK(kr.kernel.graph.num_vertices() == 0);
    CHECK_FALSE(kr.no_instance);

    KernelOptions no_trivial;
    no_trivial.trivial_yes = false;
    // k + 2 disjoint P3s: RR1 charges each component, budget runs out.
    kr = kernelize({fixtures::disjoint_p3s(5), 3}, no_trivial);
    CHECK(kr.no_instance);
    CHECK(*oracle_min_deletions(fixtures::disjoint_p3s(5)).optimum == 5);
  }

  TEST_CASE("kernelize is safe, lifts, replays and is idempotent") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 300; ++t) {
      const ColoredGraph g = brute::random_graph(rng, 3 + static_cast<Vertex>(rng() % 7), 0.3 + 0.1 * (t % 4));
      const Instance inst{g, static_cast<std::int64_t>(rng() % (g.num_edges() / 2 + 2))};
      for (bool bridge : {false, true}) {
        KernelOptions opt;
        opt.bridge_rule = bridge;
        opt.trivial_yes = t % 2 == 0;
        const KernelResult kr = kernelize(inst, opt);
        CHECK(yes(inst) == (!kr.no_instance && yes(kr.kernel)));
        CHECK(replay(inst, kr.trace) == kr.kernel);
        CHECK(inst.k - kr.kernel.k == kr.trace.cost());
        if (kr.no_instance) continue;
        const KernelResult again = kernelize(kr.kernel, opt);
        CHECK(again.kernel == kr.kernel);
        CHECK(again.trace.cost() == 0);
        const OracleResult o = oracle_min_deletions(kr.kernel.graph, kr.kernel.k);
        if (o.optimum) CHECK(verify_solution(g, lift_solution(kr.trace, o.witness), inst.k).ok);
      }
    }
  }

  TEST_CASE("lift with an empty trace is the identity") {
    const DeletionSet s{{0, 1}, {2, 3}};
    CHECK(lift_solution(KernelTrace{}, s) == s);
    KernelTrace t;
    t.steps.push_back(ForcedEdgeDeletion{{4, 5}});
    CHECK(lift_solution(t, s) == DeletionSet{{0, 1}, {2, 3}, {4, 5}});
  }

  TEST_CASE("vertex bound") {
    CHECK(kernel_vertex_bound(0, 5) == 0);
    CHECK(kernel_vertex_bound(2, 3) == 6 * 2 * 3 * 2 + 6 * 2 * 2);
    CHECK(kernel_vertex_bound(10, 2) == 6 * 10 * 2 * 4 + 6 * 10 * 4);
  }
}

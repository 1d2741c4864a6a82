#include <algorithm>
#include <random>

#include "bpd/errors.hpp"
#include "bpd/format.hpp"
#include "bpd/generate.hpp"
#include "bpd/graph.hpp"
#include "doctest.h"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace bpd;
using fixtures::graph_of;

TEST_SUITE("graph") {
  TEST_CASE("color helpers") {
    CHECK(other(Color::Red) == Color::Blue);
    CHECK(other(Color::Blue) == Color::Red);
    CHECK(Color::Red != Color::Blue);
  }

  TEST_CASE("edges are normalized") {
    CHECK(VertexPair(5, 2) == VertexPair(2, 5));
    CHECK(VertexPair(5, 2).u == 2);
    CHECK(Edge(3, 1, Color::Red) == Edge(1, 3, Color::Red));
  }

  TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(graph_of(3, {{0, 0, 'b'}}), PreconditionError);
    CHECK_THROWS_AS(graph_of(3, {{0, 1, 'b'}, {1, 0, 'r'}}), PreconditionError);
    CHECK_THROWS_AS(graph_of(3, {{0, 3, 'b'}}), PreconditionError);
  }

  TEST_CASE("neighbors") {
    const ColoredGraph iso(4);
    CHECK(neighbors(iso, 2).empty());
    const ColoredGraph p = graph_of(3, {{0, 1, 'b'}, {1, 2, 'r'}});
    const auto nb = neighbors(p, 1);
    REQUIRE(nb.size() == 2);
    CHECK(nb[0] == Neighbor{0, Color::Blue});
    CHECK(nb[1] == Neighbor{2, Color::Red});
    CHECK_THROWS_AS(neighbors(p, 3), PreconditionError);
    CHECK_THROWS_AS(neighbors(p, -1), PreconditionError);

    const ColoredGraph var = gadget(GadgetKind::Variable);
    CHECK(var.degree(0, Color::Blue) == 4);
    CHECK(var.degree(0, Color::Red) == 4);
  }

  TEST_CASE("closed and second neighborhoods") {
    const ColoredGraph p = graph_of(5, {{0, 1, 'b'}, {1, 2, 'r'}, {2, 3, 'b'}});
    CHECK(closed_neighborhood(p, 1) == std::vector<Vertex>{0, 1, 2});
    CHECK(second_neighborhood(p, 1) == std::vector<Vertex>{3});
    CHECK(second_neighborhood(p, 4).empty());
  }

  TEST_CASE("edges_between") {
    const ColoredGraph p = fixtures::single_p3();
    const std::vector<Vertex> a{0}, b{2};
    CHECK(edges_between(p, a, b).empty());
    const std::vector<Vertex> all{0, 1, 2};
    CHECK(edges_between(p, all, all).size() == 2);
    CHECK(edges_within(p, all).size() == 2);

    const ColoredGraph cl = gadget(GadgetKind::Clause);
    const std::vector<Vertex> a12{0, 1}, bw{3, 4, 5, 6, 7, 8, 9};
    CHECK(edges_between(cl, a12, bw).size() == 14);
  }

  TEST_CASE("delete_edges") {
    const ColoredGraph p = fixtures::single_p3();
    CHECK(delete_edges(p, std::span<const VertexPair>{}) == p);
    const VertexPair blue(0, 1);
    const ColoredGraph q = delete_edges(p, std::span<const VertexPair>(&blue, 1));
    CHECK(brute::p3_free(q));
    CHECK(q.num_vertices() == 3);
    CHECK(p.num_edges() == 2);  // value semantics
    const VertexPair missing(0, 2);
    CHECK_THROWS_AS(delete_edges(p, std::span<const VertexPair>(&missing, 1)), PreconditionError);
    const Edge wrong(0, 1, Color::Red);
    CHECK_THROWS_AS(delete_edges(p, std::span<const Edge>(&wrong, 1)), PreconditionError);

    const ColoredGraph cl = gadget(GadgetKind::Clause);
    const std::vector<Vertex> a12{0, 1}, bw{3, 4, 5, 6, 7, 8, 9};
    std::vector<VertexPair> s;
    for (const Edge& e : edges_between(cl, a12, bw)) s.push_back(e.ends);
    const ColoredGraph rest = delete_edges(cl, s);
    CHECK(rest.num_edges() == cl.num_edges() - 14);
    CHECK(brute::p3_free(rest));
  }

  TEST_CASE("components") {
    CHECK(connected_components(ColoredGraph(4)).size() == 4);
    const ColoredGraph p = graph_of(4, {{0, 1, 'b'}, {1, 2, 'r'}});
    CHECK(connected_components(p).size() == 2);
    CnfFormula f;
    f.num_vars = 3;
    f.clauses = {{1, -2, 3}};
    CHECK(connected_components(reduce_sat_to_bpd(f).instance.graph).size() == 1);
  }

  TEST_CASE("bridges") {
    const ColoredGraph tree = graph_of(5, {{0, 1, 'b'}, {1, 2, 'r'}, {1, 3, 'r'}, {3, 4, 'b'}});
    CHECK(bridges(tree).size() == 4);
    CHECK(bridges(fixtures::cycle_of({Color::Red, Color::Blue, Color::Red, Color::Blue})).empty());
    const ColoredGraph paw = graph_of(4, {{0, 1, 'b'}, {1, 2, 'b'}, {0, 2, 'r'}, {2, 3, 'r'}});
    CHECK(bridges(paw) == brute::bridges(paw));
    CHECK(bridges(paw) == std::vector<VertexPair>{{2, 3}});
  }

  TEST_CASE("bridges match brute force on small random graphs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 400; ++t) {
      const ColoredGraph g = brute::random_graph(rng, 2 + static_cast<Vertex>(rng() % 7), 0.35);
      if (g.num_edges() > 12) continue;
      CHECK(bridges(g) == brute::bridges(g));
      CHECK(static_cast<int>(connected_components(g).size()) == brute::component_count(g));
    }
  }

  TEST_CASE("degree splits by color and stats agree") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
      const ColoredGraph g = brute::random_graph(rng, 9, 0.4);
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        CHECK(g.degree(v) == g.degree(v, Color::Blue) + g.degree(v, Color::Red));
      const InstanceStats s = stats(g, 2);
      CHECK(s.m == s.m_red + s.m_blue);
      CHECK(s.max_degree <= s.n - 1);
      CHECK(s.ell == static_cast<std::int64_t>(s.m) - 2);
    }
  }

  TEST_CASE("sparse lookup agrees with neighbor lists") {
    std::vector<Edge> edges;
    const Vertex n = ColoredGraph::kDenseLimit + 10;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1, i % 3 ? Color::Red : Color::Blue);
    const ColoredGraph g(n, edges);
    CHECK(g.color(0, 1) == Color::Blue);
    CHECK(g.color(1, 2) == Color::Red);
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.color(n - 1, n - 2).has_value());
  }

  TEST_CASE("edge ids follow canonical order") {
    const ColoredGraph g = gadget(GadgetKind::Clause);
    const EdgeIds ids(g);
    const auto edges = g.edges();
    REQUIRE(ids.size() == static_cast<int>(edges.size()));
    for (int i = 0; i < ids.size(); ++i) {
      CHECK(ids.id(edges[i].u(), edges[i].v()) == i);
      CHECK(ids.id(edges[i].v(), edges[i].u()) == i);
    }
  }

  TEST_CASE("induced subgraph relabels in order") {
    const ColoredGraph g = graph_of(5, {{0, 1, 'b'}, {1, 3, 'r'}, {3, 4, 'b'}});
    const std::vector<Vertex> keep{1, 3, 4};
    const auto sub = induced_subgraph(g, keep);
    CHECK(sub.graph.num_vertices() == 3);
    CHECK(sub.graph.num_edges() == 2);
    CHECK(sub.to_original == keep);
    CHECK(sub.graph.color(0, 1) == Color::Red);
  }
}

TEST_SUITE("format") {
  TEST_CASE("round trip is canonical") {
    const std::string text = "# comment\np bpd 4 3\n\n2 1 r\n0 1 b\n# another\n3 2 b\n";
    const ColoredGraph g = parse_bpd(text);
    const std::string canon = write_bpd(g);
    CHECK(canon == "p bpd 4 3\n0 1 b\n1 2 r\n2 3 b\n");
    CHECK(write_bpd(parse_bpd(canon)) == canon);
  }

  TEST_CASE("round trip on random graphs") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
      const ColoredGraph g = brute::random_graph(rng, 10, 0.3);
      CHECK(parse_bpd(write_bpd(g)) == g);
    }
  }

  TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_bpd("0 1 b\n"), ParseError);
    CHECK_THROWS_AS(parse_bpd("p bpd 3 1\n0 0 b\n"), ParseError);
    CHECK_THROWS_AS(parse_bpd("p bpd 3 2\n0 1 b\n1 0 r\n"), ParseError);
    CHECK_THROWS_AS(parse_bpd("p bpd 3 1\n0 3 b\n"), ParseError);
    CHECK_THROWS_AS(parse_bpd("p bpd 3 2\n0 1 b\n"), ParseError);
    CHECK_THROWS_AS(parse_bpd("p bpd 3 1\n0 1 g\n"), ParseError);
    CHECK_THROWS_AS(parse_bpd("p bpd 3 1\n0 x b\n"), ParseError);
    CHECK_THROWS_AS(parse_bpd("p cnf 3 1\n"), ParseError);
  }
}

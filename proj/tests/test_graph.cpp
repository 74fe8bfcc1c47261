#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "graphcoh/graph.hpp"
#include "oracles.hpp"

using namespace graphcoh;

namespace {

GraphSkeleton theta() { return GraphSkeleton(2, {{1, 2}, {1, 2}, {1, 2}}); }
GraphSkeleton k4() { return GraphSkeleton(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

oracle::EdgeList pairs(const GraphSkeleton& g) {
  oracle::EdgeList out;
  for (const Edge& e : g.edges()) out.push_back({e.tail, e.head});
  return out;
}

/// Random loop-free skeleton without isolated vertices.
GraphSkeleton random_skeleton(std::mt19937_64& rng, int max_v, int max_e) {
  while (true) {
    const int v = std::uniform_int_distribution<int>(2, max_v)(rng);
    const int e = std::uniform_int_distribution<int>(1, max_e)(rng);
    std::vector<Edge> edges;
    std::uniform_int_distribution<int> pick(1, v);
    for (int k = 0; k < e; ++k) {
      int a = pick(rng), b = pick(rng);
      while (b == a) b = pick(rng);
      edges.push_back({a, b});
    }
    try {
      return GraphSkeleton(v, edges);
    } catch (const GraphError&) {
    }
  }
}

Symmetry random_symmetry(std::mt19937_64& rng, const GraphSkeleton& g, bool renumber) {
  Symmetry s = Symmetry::identity(g);
  std::shuffle(s.vertex_map.begin(), s.vertex_map.end(), rng);
  for (std::size_t e = 0; e < s.reversed.size(); ++e) s.reversed[e] = (rng() & 1U) != 0;
  if (renumber) std::shuffle(s.edge_map.begin(), s.edge_map.end(), rng);
  return s;
}

}  // namespace

TEST_CASE("new_graph accepts theta and K4") {
  CHECK(new_graph(2, {{1, 2}, {1, 2}, {1, 2}}).edge_count() == 3);
  CHECK(new_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}).vertex_count() == 4);
}

TEST_CASE("new_graph rejects loops, bad indices and isolated vertices") {
  try {
    new_graph(2, {{1, 1}});
    FAIL("loop accepted");
  } catch (const GraphError& e) {
    CHECK(e.kind() == GraphError::Kind::loop_edge);
    CHECK(e.index() == 1);
  }
  try {
    new_graph(2, {{1, 2}, {1, 3}});
    FAIL("out of range accepted");
  } catch (const GraphError& e) {
    CHECK(e.kind() == GraphError::Kind::vertex_out_of_range);
    CHECK(e.index() == 2);
  }
  CHECK_THROWS_AS(new_graph(3, {{1, 2}}), GraphError);
  CHECK_NOTHROW(new_graph(0, {}));
}

TEST_CASE("grading") {
  CHECK(grading(theta()) == Grading{1, 0});
  CHECK(grading(k4()) == Grading{2, 0});
  CHECK(grading(GraphSkeleton(3, {{1, 2}, {2, 3}})) == Grading{-1, -5});
  CHECK(vertices_at({2, 1}) == 3);
  CHECK(edges_at({2, 1}) == 5);
}

TEST_CASE("regular edges") {
  CHECK(regular_edges(theta()).empty());
  CHECK(regular_edges(k4()) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(regular_edges(GraphSkeleton(3, {{1, 2}, {1, 2}, {2, 3}})) == std::vector<int>{3});
  CHECK(regular_edges(GraphSkeleton(2, {{1, 2}, {2, 1}})).empty());
}

TEST_CASE("half-edge order follows edge numbers") {
  const GraphSkeleton g(3, {{2, 1}, {1, 3}, {3, 2}, {1, 2}});
  const auto order = half_edge_order(g);
  REQUIRE(order[0].size() == 3);
  CHECK(order[0][0] == HalfEdge{1, true});
  CHECK(order[0][1] == HalfEdge{2, false});
  CHECK(order[0][2] == HalfEdge{4, false});
  CHECK(half_edge_slot(g, 2, 3) == 2);
  CHECK(half_edge_slot(g, 3, 3) == 2);
  for (int v = 1; v <= 3; ++v) CHECK(static_cast<int>(order[static_cast<std::size_t>(v - 1)].size()) == g.valence(v));
}

TEST_CASE("canonicalize examples") {
  const GraphClass rev = canonicalize(GraphSkeleton(2, {{2, 1}, {2, 1}, {2, 1}}), SymmetryMode::literal);
  CHECK(rev.canonical == theta());
  CHECK(rev.sign == SignState::minus);

  CHECK(canonicalize(GraphSkeleton(2, {{1, 2}, {1, 2}}), SymmetryMode::literal).is_zero());
  CHECK(canonicalize(GraphSkeleton(2, {{1, 2}, {1, 2}}), SymmetryMode::edge_renumbering).is_zero());

  const GraphClass th = canonicalize(theta(), SymmetryMode::literal);
  CHECK(th.canonical == theta());
  CHECK(th.sign == SignState::plus);
  CHECK(th.grading == Grading{1, 0});
}

TEST_CASE("canonical form and sign agree with the orbit oracle (literal)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const GraphSkeleton g = random_skeleton(rng, 5, 7);
    const oracle::Orbit o = oracle::orbit(g.vertex_count(), pairs(g), false);
    const GraphClass c = canonicalize(g, SymmetryMode::literal);
    INFO(to_text(g));
    REQUIRE(c.is_zero() == o.zero);
    if (!o.zero) {
      CHECK(pairs(c.canonical) == o.canonical);
      CHECK(sign_value(c.sign) == o.sign);
    }
  }
}

TEST_CASE("canonical form and sign agree with the orbit oracle (edge renumbering)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const GraphSkeleton g = random_skeleton(rng, 4, 5);
    const oracle::Orbit o = oracle::orbit(g.vertex_count(), pairs(g), true);
    const GraphClass c = canonicalize(g, SymmetryMode::edge_renumbering);
    INFO(to_text(g));
    REQUIRE(c.is_zero() == o.zero);
    if (!o.zero) {
      CHECK(pairs(c.canonical) == o.canonical);
      CHECK(sign_value(c.sign) == o.sign);
    }
  }
}

TEST_CASE("property: idempotence on random skeletons up to six vertices") {
  std::mt19937_64 rng(3);
  for (SymmetryMode mode : {SymmetryMode::literal, SymmetryMode::edge_renumbering}) {
    for (int trial = 0; trial < 300; ++trial) {
      const GraphSkeleton g = random_skeleton(rng, 6, 9);
      const GraphClass c = canonicalize(g, mode);
      if (c.is_zero()) continue;
      const GraphClass again = canonicalize(c.canonical, mode);
      INFO(to_text(g));
      CHECK(again.canonical == c.canonical);
      CHECK(again.sign == SignState::plus);
    }
  }
}

TEST_CASE("property: sign multiplicativity, grading and regular edges under symmetries") {
  std::mt19937_64 rng(5);
  for (SymmetryMode mode : {SymmetryMode::literal, SymmetryMode::edge_renumbering}) {
    const bool renumber = mode == SymmetryMode::edge_renumbering;
    for (int trial = 0; trial < 300; ++trial) {
      const GraphSkeleton g = random_skeleton(rng, 6, 8);
      const Symmetry s = random_symmetry(rng, g, renumber);
      const auto [moved, sign] = apply_symmetry(g, s);
      const GraphClass a = canonicalize(g, mode);
      const GraphClass b = canonicalize(moved, mode);
      INFO(to_text(g));
      REQUIRE(a.is_zero() == b.is_zero());
      if (!a.is_zero()) {
        CHECK(a.canonical == b.canonical);
        CHECK(sign_value(a.sign) == sign * sign_value(b.sign));
      }
      CHECK(grading(moved) == grading(g));

      std::set<std::pair<int, int>> expected, got;
      for (int e : regular_edges(g)) {
        const Edge& x = g.edge(e);
        const int p = s.vertex_map[static_cast<std::size_t>(x.tail - 1)];
        const int q = s.vertex_map[static_cast<std::size_t>(x.head - 1)];
        expected.insert(std::minmax(p, q));
      }
      for (int e : regular_edges(moved)) got.insert(std::minmax(moved.edge(e).tail, moved.edge(e).head));
      CHECK(expected == got);
    }
  }
}

TEST_CASE("automorphisms fix the graph with their stated sign") {
  for (const GraphSkeleton& g : {theta(), k4(), GraphSkeleton(2, {{1, 2}, {1, 2}})}) {
    for (SymmetryMode mode : {SymmetryMode::literal, SymmetryMode::edge_renumbering}) {
      const auto autos = automorphisms(g, mode);
      CHECK(!autos.empty());
      bool negative = false;
      for (const auto& [sym, sign] : autos) {
        const auto [image, s] = apply_symmetry(g, sym);
        CHECK(image == g);
        CHECK(s == sign);
        negative = negative || sign < 0;
      }
      CHECK(negative == canonicalize(g, mode).is_zero());
    }
  }
  CHECK(automorphisms(k4(), SymmetryMode::edge_renumbering).size() == 24);
  CHECK(automorphisms(k4(), SymmetryMode::literal).size() == 1);
}

TEST_CASE("enumerate_trivalent against brute force") {
  for (int m = 1; m <= 2; ++m) {
    for (bool connected : {true, false}) {
      for (SymmetryMode mode : {SymmetryMode::edge_renumbering, SymmetryMode::literal}) {
        const bool renumber = mode == SymmetryMode::edge_renumbering;
        const auto classes = enumerate_trivalent(m, connected, mode);
        const auto expected = oracle::trivalent_classes(m, connected, renumber);
        std::set<oracle::EdgeList> got;
        for (const auto& c : classes) {
          got.insert(pairs(c.canonical));
          CHECK(c.sign == SignState::plus);
          int total = 0;
          for (int v : c.canonical.valences()) total += v;
          CHECK(total == 6 * m);
        }
        CHECK(got == expected);
        CHECK(std::is_sorted(classes.begin(), classes.end(),
                             [](const GraphClass& a, const GraphClass& b) { return a.canonical < b.canonical; }));
      }
    }
  }
  // Frozen from the oracle.
  CHECK(enumerate_trivalent(1, true, SymmetryMode::edge_renumbering).size() == 1);
  CHECK(enumerate_trivalent(2, true, SymmetryMode::edge_renumbering).size() == 2);
  CHECK(enumerate_trivalent(1, true, SymmetryMode::literal).size() == 1);
  CHECK(enumerate_trivalent(2, true, SymmetryMode::literal).size() == 75);
  CHECK(enumerate_trivalent(2, false, SymmetryMode::literal).size() == 85);
  CHECK(enumerate_trivalent(2, false, SymmetryMode::edge_renumbering).size() == 3);
}

TEST_CASE("enumeration respects the cap") {
  EnumerationOptions opts;
  opts.cap = 10;
  CHECK_THROWS_AS(enumerate_classes(4, 6, opts), BasisTooLarge);
  opts.cap = 75;
  CHECK(enumerate_classes(4, 6, opts).size() == 75);
  CHECK(enumerate_graded({1, 1}, opts).empty());
}

TEST_CASE("text format round trip") {
  std::ostringstream os;
  write_graph(os, k4());
  write_graph(os, theta());
  std::istringstream is("# two graphs\n" + os.str());
  const auto graphs = read_graphs(is);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0] == k4());
  CHECK(graphs[1] == theta());
  CHECK(parse_graph(to_text(k4())) == k4());
  CHECK(parse_graph("V 2 E 3 # theta\n1 2\n1 2 # middle\n2 1\n") == GraphSkeleton(2, {{1, 2}, {1, 2}, {2, 1}}));
  CHECK_THROWS_AS(parse_graph("V 2 E 3\n1 2\n"), GraphError);
  CHECK_THROWS_AS(parse_graph("V 2 E 1\n1 1\n"), GraphError);
  CHECK_THROWS_AS(parse_graph("graph\n"), GraphError);
}

TEST_CASE("symmetry modes parse and print") {
  CHECK(parse_symmetry_mode("literal") == SymmetryMode::literal);
  CHECK(parse_symmetry_mode("edge-renumbering") == SymmetryMode::edge_renumbering);
  CHECK(to_string(SymmetryMode::edge_renumbering) == "edge-renumbering");
  CHECK_THROWS(parse_symmetry_mode("loose"));
}

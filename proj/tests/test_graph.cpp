#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "gwp/errors.hpp"
#include "gwp/graph.hpp"
#include "oracles.hpp"

using namespace gwp;

namespace {

std::vector<std::string> formatted(const std::vector<PathWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(format_path(w));
  return out;
}

}  // namespace

TEST_CASE("parse_graph reads vertices and edges in declaration order") {
  Graph g = parse_graph("vertices: v\nedge l: v -> v");
  REQUIRE(g.vertex_count() == 1);
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edge(0).name == "l");
  CHECK(g.edge(0).initial == g.edge(0).final);

  Graph h = parse_graph("# two vertices\nvertices: v1 v2\n\nedge e: v1 -> v2   # the edge\n");
  CHECK(h.vertex_name(0) == "v1");
  CHECK(h.vertex_name(1) == "v2");
  CHECK(h.edge(0).initial == 0);
  CHECK(h.edge(0).final == 1);
}

TEST_CASE("parse_graph reports errors with a location") {
  try {
    parse_graph("edge e: v1 -> v2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 9);
    CHECK(std::string(e.what()).find("undeclared vertex 'v1'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph("vertices: v\nvertices: w"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: v v"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: v\nedge v: v -> v"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: v\nedge l: v -> v\nedge l: v -> v"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: v\nedge l: v => v"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: v\nedge l: v -> v extra"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex: v"), ParseError);
  try {
    parse_graph("vertices: a\n  edge 9x: a -> a");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
}

TEST_CASE("concat follows travel order and treats vertices as units") {
  Graph g = fixtures::load("single_edge");
  PathWord v1 = PathWord::vertex(g, 0), v2 = PathWord::vertex(g, 1), e = PathWord::edge(g, 0);
  CHECK(*concat(v1, e) == e);
  CHECK(*concat(e, v2) == e);
  CHECK_FALSE(concat(e, e));
  CHECK_FALSE(concat(v2, e));

  Graph loop = fixtures::load("one_loop");
  PathWord l = PathWord::edge(loop, 0);
  auto ll = concat(l, l);
  REQUIRE(ll);
  CHECK(ll->length() == 2);
  CHECK(format_path(*ll) == "l.l");

  CHECK_THROWS_AS(concat(e, l), PreconditionError);
  CHECK_THROWS_AS(PathWord::from_edges(g, {}), PreconditionError);
  CHECK_THROWS_AS(PathWord::from_edges(g, {0, 0}), PreconditionError);
}

TEST_CASE("enumerate_paths lists vertices, then paths by length") {
  Graph loop = fixtures::load("one_loop");
  CHECK(formatted(enumerate_paths(loop, 2)) == std::vector<std::string>{"@v", "l", "l.l"});
  Graph edge = fixtures::load("single_edge");
  CHECK(formatted(enumerate_paths(edge, 3)) == std::vector<std::string>{"@v1", "@v2", "e"});
  Graph c3 = fixtures::load("c3");
  CHECK(formatted(enumerate_paths(c3, 0)) == std::vector<std::string>{"@v1", "@v2", "@v3"});
  CHECK(formatted(enumerate_paths(c3, 2)) ==
        std::vector<std::string>{"@v1", "@v2", "@v3", "e1", "e2", "e3", "e1.e2", "e2.e3", "e3.e1"});

  for (const auto& name : fixtures::all()) {
    Graph g = fixtures::load(name);
    auto ws = enumerate_paths(g, 1);
    CHECK(ws.size() == g.vertex_count() + g.edge_count());
    auto longer = enumerate_paths(g, 3);
    CHECK(std::is_sorted(longer.begin(), longer.end()));
  }
}

TEST_CASE("enumerate_paths agrees with an adjacency walk count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_graph(rng);
    // Number of walks of length k is the sum of the entries of A^k.
    std::size_t n = g.vertex_count();
    std::vector<std::vector<unsigned long>> a(n, std::vector<unsigned long>(n, 0)), power = a;
    for (const Edge& e : g.edges()) ++a[e.initial][e.final];
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    std::size_t expected = 0;
    for (int k = 0; k <= 3; ++k) {
      for (const auto& row : power)
        for (auto x : row) expected += x;
      std::vector<std::vector<unsigned long>> next(n, std::vector<unsigned long>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k2 = 0; k2 < n; ++k2) next[i][j] += power[i][k2] * a[k2][j];
      power = next;
    }
    CHECK(enumerate_paths(g, 3).size() == expected);
  }
}

TEST_CASE("primitive roots") {
  Graph loop = fixtures::load("one_loop");
  auto l = fixtures::word(loop, "l");
  auto r1 = primitive_root(l);
  CHECK(r1.root == l);
  CHECK(r1.power == 1);
  auto r2 = primitive_root(fixtures::word(loop, "l.l"));
  CHECK(r2.root == l);
  CHECK(r2.power == 2);

  Graph two = parse_graph("vertices: a b\nedge e: a -> b\nedge f: b -> a");
  auto r = primitive_root(fixtures::word(two, "e.f.e.f"));
  CHECK(format_path(r.root) == "e.f");
  CHECK(r.power == 2);
  CHECK(is_basic_loop(fixtures::word(two, "e.f")));
  CHECK_FALSE(is_basic_loop(fixtures::word(two, "e.f.e.f")));
  CHECK_THROWS_AS(primitive_root(fixtures::word(two, "e")), PreconditionError);
  CHECK_THROWS_AS(primitive_root(PathWord::vertex(two, 0)), PreconditionError);

  // Reconcatenating the root gives the word back.
  for (const auto& w : enumerate_paths(two, 6)) {
    if (!w.is_loop()) continue;
    auto [root, k] = primitive_root(w);
    PathWord acc = root;
    for (std::size_t i = 1; i < k; ++i) acc = *concat(acc, root);
    CHECK(acc == w);
  }
}

TEST_CASE("diagram distinctness") {
  Graph loop = fixtures::load("one_loop");
  auto l = fixtures::word(loop, "l"), ll = fixtures::word(loop, "l.l");
  CHECK_FALSE(diagram_distinct(l, ll));
  CHECK_FALSE(diagram_distinct(l, l));
  Graph par = fixtures::load("parallel_edges");
  CHECK(diagram_distinct(fixtures::word(par, "e1"), fixtures::word(par, "e2")));
  CHECK_THROWS_AS(diagram_distinct(PathWord::vertex(par, 0), fixtures::word(par, "e1")), PreconditionError);

  // Rotations of one cycle count as distinct.
  Graph two = parse_graph("vertices: a b\nedge e: a -> b\nedge f: b -> a");
  CHECK(diagram_distinct(fixtures::word(two, "e.f"), fixtures::word(two, "f.e")));
  CHECK_FALSE(diagram_distinct(fixtures::word(two, "e.f"), fixtures::word(two, "e.f.e.f")));

  for (const auto& name : fixtures::all()) {
    Graph g = fixtures::load(name);
    auto ws = enumerate_paths(g, 3);
    for (const auto& a : ws) {
      if (a.is_vertex()) continue;
      for (const auto& b : ws) {
        if (b.is_vertex()) continue;
        CHECK(diagram_distinct(a, b) == diagram_distinct(b, a));
        if (!a.is_loop() || !b.is_loop()) CHECK(diagram_distinct(a, b) == !(a == b));
      }
    }
  }
}

TEST_CASE("classify_edges partitions the edge set") {
  auto names = [](const Graph& g, const std::vector<EdgeId>& ids) {
    std::vector<std::string> out;
    for (EdgeId e : ids) out.push_back(g.edge(e).name);
    return out;
  };
  Graph loop = fixtures::load("one_loop");
  CHECK(names(loop, classify_edges(loop).loop_edges) == std::vector<std::string>{"l"});
  CHECK(classify_edges(loop).non_loop_edges.empty());

  Graph g44 = fixtures::load("two_vertex_loops");
  auto cls = classify_edges(g44);
  CHECK(names(g44, cls.loop_edges) == std::vector<std::string>{"l1_1", "l1_2", "l2_1", "l2_2", "l2_3"});
  CHECK(names(g44, cls.non_loop_edges) == std::vector<std::string>{"e"});

  Graph c3 = fixtures::load("c3");
  CHECK(classify_edges(c3).loop_edges.empty());
  CHECK(classify_edges(c3).non_loop_edges.size() == 3);
}

TEST_CASE("paths format and parse") {
  Graph c3 = fixtures::load("c3");
  for (const auto& w : enumerate_paths(c3, 4)) CHECK(parse_path(c3, format_path(w)) == w);
  CHECK(parse_path(c3, "v2") == PathWord::vertex(c3, 1));
  CHECK_THROWS_AS(parse_path(c3, "e1.e3"), PreconditionError);
  CHECK_THROWS_AS(parse_path(c3, "nope"), PreconditionError);
  CHECK_THROWS_AS(parse_path(c3, ""), PreconditionError);
}

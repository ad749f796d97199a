#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "gwp/cumulants.hpp"
#include "oracles.hpp"

using namespace gwp;

TEST_CASE("NC(n) counts and membership") {
  auto catalan = oracle::catalan_table(10);
  for (std::size_t n = 1; n <= 10; ++n) {
    CAPTURE(n);
    const auto& ncs = enumerate_nc(n);
    CHECK(ncs.size() == catalan[n]);
    CHECK(catalan_number(static_cast<unsigned>(n)) == catalan[n]);
    for (const auto& pi : ncs) CHECK_FALSE(oracle::crossing(pi.blocks(), n));
  }
  // Brute force over all set partitions for small n.
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t noncrossing = 0;
    for (const auto& blocks : oracle::set_partitions(n)) {
      bool nc = !oracle::crossing(blocks, n);
      CHECK(is_noncrossing(blocks) == nc);
      if (nc) ++noncrossing;
    }
    CHECK(noncrossing == enumerate_nc(n).size());
  }
  CHECK(enumerate_nc(1).front().to_string() == "{1}");
  CHECK(enumerate_nc(3).size() == 5);
  CHECK(enumerate_nc(4).size() == 14);
  CHECK_THROWS_AS(enumerate_nc(11), BoundError);
  CHECK_THROWS_AS(enumerate_nc(0), PreconditionError);
  CHECK_THROWS_AS(NCPartition(4, {{1, 3}, {2, 4}}), PreconditionError);
  CHECK_THROWS_AS(NCPartition(3, {{1, 2}}), PreconditionError);
  CHECK(NCPartition(4, {{2, 3}, {4, 1}}).to_string() == "{1,4}{2,3}");
}

TEST_CASE("nested evaluation follows the bracket structure") {
  Graph g = fixtures::load("single_edge");
  // Tagged arguments with distinct weights; the source multiplies weights
  // and scales by a per-arity constant so every nesting is visible.
  auto weight = [&](long a, long b) {
    return DiagonalElement::vertex(g, 0, a) + DiagonalElement::vertex(g, 1, b);
  };
  std::vector<TaggedArgument> args{{"a1", weight(2, 3)}, {"a2", weight(5, 7)}, {"a3", weight(11, 13)},
                                   {"a4", weight(17, 19)}};
  CumulantSource<TaggedArgument> source = [&](std::span<const TaggedArgument> xs) {
    DiagonalElement out = DiagonalElement::unit(g) * Scalar(static_cast<long>(10 * xs.size()));
    for (const auto& x : xs) out *= x.weight;
    return out;
  };
  auto k = [&](std::vector<TaggedArgument> xs) { return source(xs); };

  CHECK(nested_evaluate(NCPartition(4, {{1, 2, 3, 4}}), std::span<const TaggedArgument>(args), source) == k(args));

  // {1,4}{2,3}: source(a1 * source(a2, a3), a4).
  DiagonalElement inner = k({args[1], args[2]});
  DiagonalElement expected = k({right_multiply(args[0], inner), args[3]});
  CHECK(nested_evaluate(NCPartition(4, {{1, 4}, {2, 3}}), std::span<const TaggedArgument>(args), source) == expected);

  // {1,2}{3,4}: product of the two outer values.
  CHECK(nested_evaluate(NCPartition(4, {{1, 2}, {3, 4}}), std::span<const TaggedArgument>(args), source) ==
        k({args[0], args[1]}) * k({args[2], args[3]}));

  CHECK_THROWS_AS(nested_evaluate(NCPartition(3, {{1, 2, 3}}), std::span<const TaggedArgument>(args), source),
                  PreconditionError);
}

TEST_CASE("an order-two source yields Catalan moments") {
  Graph g = fixtures::load("one_loop");
  auto catalan = oracle::catalan_table(5);
  for (long gamma : {1L, 2L, 3L}) {
    auto source = order_two_source(g, 0, Scalar(gamma));
    for (std::size_t n = 1; n <= 10; ++n) {
      std::vector<TaggedArgument> args(n, TaggedArgument{"x", DiagonalElement::unit(g)});
      DiagonalElement m = cumulant_to_moment(std::span<const TaggedArgument>(args), source);
      if (n % 2 == 1) {
        CHECK(m.is_zero());
      } else {
        Rational expected(static_cast<long>(catalan[n / 2]));
        for (std::size_t i = 0; i < n / 2; ++i) expected *= gamma;
        CHECK(m == DiagonalElement::vertex(g, 0, Scalar(expected)));
      }
    }
  }
}

TEST_CASE("one-loop cumulants under each backend") {
  Graph g = fixtures::load("one_loop");
  auto l = fixtures::word(g, "l"), ll = fixtures::word(g, "l.l");
  auto Lv = [&](long c) { return DiagonalElement::vertex(g, 0, c); };

  Backend fock = Backend::fock(8);
  CumulantEngine engine;
  auto a = AlgebraElement::self_adjoint_pair(fock, l);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<AlgebraElement> args(n, a);
    CHECK(engine.cumulant(args) == (n == 2 ? Lv(1) : DiagonalElement(g)));
  }
  std::vector<AlgebraElement> four(4, a);
  CHECK(engine.moment(four) == Lv(2));
  auto b = AlgebraElement::self_adjoint_pair(fock, ll);
  std::vector<AlgebraElement> mixed{a, a, b};
  CHECK(engine.cumulant(mixed) == Lv(1));

  Backend ax = Backend::axiomatic();
  CumulantEngine engine2;
  auto x = AlgebraElement::self_adjoint_pair(ax, l);
  for (unsigned n = 1; n <= 8; ++n) {
    std::vector<AlgebraElement> args(n, x);
    CHECK(engine2.moment(args) == Lv(oracle::one_loop_axiomatic_moment(n)));
  }
  std::vector<AlgebraElement> x2(2, x), x4(4, x);
  CHECK(engine2.cumulant(x2) == Lv(2));
  CHECK(engine2.cumulant(x4) == Lv(-2));
}

TEST_CASE("k_1 is E and cumulants vanish on a zero slot") {
  Graph g = fixtures::load("single_edge");
  auto e = fixtures::word(g, "e");
  Backend b = Backend::fock(4);
  std::vector<AlgebraElement> one{AlgebraElement::creation(b, e)};
  CHECK(moment_to_cumulant(one).is_zero());
  std::vector<AlgebraElement> vertex{AlgebraElement::vertex(g, b, 1, 3)};
  CHECK(moment_to_cumulant(vertex) == DiagonalElement::vertex(g, 1, 3));
  std::vector<AlgebraElement> with_zero{AlgebraElement::creation(b, e), AlgebraElement(g, b)};
  CHECK(moment_to_cumulant(with_zero).is_zero());

  CumulantEngine small(2);
  std::vector<AlgebraElement> three(3, AlgebraElement::creation(b, e));
  CHECK_THROWS_AS(small.cumulant(three), BoundError);
  CHECK_THROWS_AS(CumulantEngine(11), BoundError);
}

TEST_CASE("cumulants are multilinear") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(rng);
    Backend b = Backend::fock(8);
    auto x = oracle::random_generator(rng, g, b).element, y = oracle::random_generator(rng, g, b).element,
         z = oracle::random_generator(rng, g, b).element;
    Scalar c = oracle::random_scalar(rng);
    CumulantEngine engine;
    std::vector<AlgebraElement> lhs{x, y * c + z, x};
    std::vector<AlgebraElement> r1{x, y, x}, r2{x, z, x};
    CHECK(engine.cumulant(lhs) == engine.cumulant(r1) * c + engine.cumulant(r2));
  }
}

TEST_CASE("round trip: summing k_pi over NC(n) gives back the moment") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(rng);
    std::uniform_int_distribution<std::size_t> arity(1, 5);
    std::size_t n = arity(rng);
    Backend b = Backend::fock(n);
    std::vector<AlgebraElement> args;
    std::vector<oracle::Element> reference;
    for (std::size_t i = 0; i < n; ++i) {
      auto gen = oracle::random_generator(rng, g, b);
      args.push_back(gen.element);
      reference.push_back(gen.reference);
    }
    CumulantEngine engine;
    CumulantSource<AlgebraElement> source = [&](std::span<const AlgebraElement> xs) { return engine.cumulant(xs); };
    DiagonalElement m = cumulant_to_moment(std::span<const AlgebraElement>(args), source);
    CHECK(m == oracle::fock_moment(g, reference));
  }
}

TEST_CASE("bimodule covariance and balancedness") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(rng, 3, 4);
    Backend b = Backend::fock(10);
    std::uniform_int_distribution<std::size_t> arity(2, 4);
    std::size_t n = arity(rng);
    std::vector<AlgebraElement> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back(oracle::random_generator(rng, g, b).element);
    DiagonalElement d(g), d2(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      d.set(v, oracle::random_scalar(rng));
      d2.set(v, oracle::random_scalar(rng));
    }
    CumulantEngine engine;
    auto outer = args;
    outer.front() = left_multiply(d, outer.front());
    outer.back() = right_multiply(outer.back(), d2);
    CHECK(engine.cumulant(outer) == d * engine.cumulant(args) * d2);

    std::uniform_int_distribution<std::size_t> slot(0, n - 2);
    std::size_t i = slot(rng);
    auto left = args, right = args;
    left[i] = right_multiply(left[i], d);
    right[i + 1] = left_multiply(d, right[i + 1]);
    CHECK(engine.cumulant(left) == engine.cumulant(right));
  }
}

TEST_CASE("mixed cumulant scans") {
  Graph par = fixtures::load("parallel_edges");
  Backend b = Backend::fock(8);
  CumulantEngine engine;
  std::vector<LabeledElement> a{{"L[e1]", AlgebraElement::creation(b, fixtures::word(par, "e1"))}};
  std::vector<LabeledElement> c{{"L[e2]", AlgebraElement::creation(b, fixtures::word(par, "e2"))}};
  auto free = mixed_cumulant_scan(a, c, 4, engine);
  CHECK(free.vanishing());
  CHECK(free.tuples_checked == (16 - 2 * 4) + (64 - 2 * 8) + (256 - 2 * 16));

  Graph loop = fixtures::load("one_loop");
  std::vector<LabeledElement> x{{"a_l", AlgebraElement::self_adjoint_pair(b, fixtures::word(loop, "l"))}};
  std::vector<LabeledElement> y{{"a_ll", AlgebraElement::self_adjoint_pair(b, fixtures::word(loop, "l.l"))}};
  auto dependent = mixed_cumulant_scan(x, y, 3, engine);
  CHECK_FALSE(dependent.vanishing());
  bool found = false;
  for (const auto& m : dependent.nonzero) {
    if (m.tuple == std::vector<std::string>{"A:a_l", "A:a_l", "B:a_ll"}) {
      found = true;
      CHECK(m.value == DiagonalElement::vertex(loop, 0));
    }
  }
  CHECK(found);

  CHECK(mixed_cumulant_scan(x, {}, 4, engine).vanishing());
  CHECK_THROWS_AS(mixed_cumulant_scan(x, y, 9, engine), BoundError);

  auto closed = close_under_adjoint(a);
  REQUIRE(closed.size() == 2);
  CHECK(closed[1].label == "L[e1]*");
  CHECK(close_under_adjoint(x).size() == 1);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "resnet/builders.hpp"
#include "resnet/errors.hpp"
#include "resnet/io.hpp"
#include "resnet/network.hpp"
#include "resnet/rational.hpp"

using namespace resnet;

TEST_CASE("parse_rational reads fractions, integers and decimals exactly") {
  CHECK(parse_rational("1/4") == Rational(1, 4));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("-1/6") == Rational(-1, 6));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5e-3") == Rational(-3, 2000));
  CHECK(parse_rational("2E2") == Rational(200));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("fraction and to_string give canonical forms") {
  CHECK(to_string(fraction(2, 4)) == "1/2");
  CHECK(to_string(fraction(-6, 3)) == "-2");
  CHECK(to_string(Rational(5, 6)) == "5/6");
}

TEST_CASE("add_edge rejects malformed resistors") {
  ResistorNetwork net(3);
  CHECK_THROWS_AS(net.add_edge(0, 0, Rational(1)), MalformedNetwork);
  CHECK_THROWS_AS(net.add_edge(0, 1, Rational(0)), MalformedNetwork);
  CHECK_THROWS_AS(net.add_edge(0, 1, Rational(-1)), MalformedNetwork);
  CHECK_THROWS_AS(net.add_edge(0, 5, Rational(1)), MalformedNetwork);
  CHECK_NOTHROW(net.add_edge(0, 1, Rational(-1), true));
  CHECK(net.has_gadget_edges());
}

TEST_CASE("labels are unique and validated") {
  ResistorNetwork net;
  net.add_vertex("a");
  CHECK_THROWS_AS(net.add_vertex("a"), MalformedNetwork);
  CHECK_THROWS_AS(net.add_vertex("has space"), MalformedNetwork);
  CHECK_THROWS_AS(net.add_vertex("#x"), MalformedNetwork);
  const VertexId v = net.add_vertex();
  CHECK(net.label(v) == "1");
  CHECK(net.find("a") == VertexId{0});
  CHECK_FALSE(net.find("zz").has_value());
}

TEST_CASE("build_laplacian on small networks") {
  SECTION("single unit edge") {
    ResistorNetwork net(2);
    net.add_edge(0, 1, Rational(1));
    Laplacian l = build_laplacian(net);
    CHECK(l(0, 0) == 1);
    CHECK(l(0, 1) == -1);
    CHECK(l(1, 0) == -1);
    CHECK(l(1, 1) == 1);
  }
  SECTION("C4") {
    Laplacian l = build_laplacian(cycle(4));
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(l(i, i) == 2);
      CHECK(l(i, (i + 1) % 4) == -1);
      CHECK(l(i, (i + 2) % 4) == 0);
    }
  }
  SECTION("parallel conductances add") {
    ResistorNetwork net(2);
    net.add_edge(0, 1, Rational(2));
    net.add_edge(0, 1, Rational(2));
    Laplacian l = build_laplacian(net);
    CHECK(l(0, 0) == 1);
    CHECK(l(0, 1) == -1);
  }
}

TEST_CASE("Laplacian rows sum to zero and the matrix is symmetric") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    ResistorNetwork net = oracle::random_network(rng, 2 + trial % 9, trial % 6);
    Laplacian l = build_laplacian(net);
    Eigen::MatrixXd f = l.to_float();
    for (std::size_t i = 0; i < l.size(); ++i) {
      Rational sum(0);
      for (std::size_t j = 0; j < l.size(); ++j) {
        sum += l(i, j);
        CHECK(l(i, j) == l(j, i));
      }
      CHECK(sum == 0);
      CHECK(std::abs(f.row(static_cast<Eigen::Index>(i)).sum()) < 1e-14);
    }
  }
}

TEST_CASE("builders produce the expected families") {
  ResistorNetwork g4 = block_tower(4);
  CHECK(g4.vertex_count() == 16);
  CHECK(g4.edge_count() == 28);
  CHECK(g4.label(4 * 2 + 2) == "(a3,b3)");

  ResistorNetwork q1 = hypercube(1);
  CHECK(q1.vertex_count() == 2);
  REQUIRE(q1.edge_count() == 1);
  CHECK(q1.edges()[0].r == 1);

  ResistorNetwork q3 = cartesian_product(path(2), cycle(4));
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);
  for (VertexId v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);

  ResistorNetwork h = hypercube(4);
  CHECK(h.vertex_count() == 16);
  CHECK(h.edge_count() == 32);
  CHECK(h.label(0) == "b1");
  CHECK(h.label(15) == "b16");
  for (VertexId v = 0; v < 16; ++v) {
    for (VertexId w : h.neighbors(v)) CHECK(std::popcount(v ^ w) == 1);
  }

  ResistorNetwork f = fan(4, 3);
  CHECK(f.vertex_count() == 5);
  CHECK(f.label(4) == "b");
  CHECK(f.edge_count() == 3 + 4);
  for (std::size_t idx : f.edges_between(0, 4)) CHECK(f.edges()[idx].r == Rational(1, 3));

  CHECK(ladder(3).vertex_count() == 6);
  CHECK(ladder(3).edge_count() == 7);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(join(path(2), empty_graph(2)).edge_count() == 1 + 4);
  CHECK(cycle(5).label(4) == "b5");
  CHECK(path(3).label(0) == "a1");
  CHECK(clique2().label(1) == "c2");

  CHECK_THROWS_AS(path(0), MalformedNetwork);
  CHECK_THROWS_AS(cycle(2), MalformedNetwork);
  CHECK_THROWS_AS(hypercube(0), MalformedNetwork);
  CHECK_THROWS_AS(cone(path(2), 1), MalformedNetwork);
}

TEST_CASE("cartesian_product sizes and degrees") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    ResistorNetwork g = oracle::random_simple_graph(rng, 1 + trial % 5, 0.4);
    ResistorNetwork h = oracle::random_simple_graph(rng, 1 + (trial / 3) % 5, 0.4);
    ResistorNetwork p = cartesian_product(g, h);
    const std::size_t nh = h.vertex_count();
    CHECK(p.vertex_count() == g.vertex_count() * nh);
    CHECK(p.edge_count() == g.edge_count() * nh + h.edge_count() * g.vertex_count());
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId x = 0; x < nh; ++x) CHECK(p.degree(u * nh + x) == g.degree(u) + h.degree(x));
    }
  }
}

TEST_CASE("parse_network examples") {
  ResistorNetwork p3 = parse_network("0 1 1\n1 2 1");
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);

  ResistorNetwork q = parse_network("0 1 1/4");
  REQUIRE(q.edge_count() == 1);
  CHECK(q.edges()[0].r == Rational(1, 4));

  ResistorNetwork g = parse_network("0 1 -1/6 gadget");
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges()[0].r == Rational(-1, 6));
  CHECK(g.edges()[0].gadget);
}

TEST_CASE("parse_network comments, blank lines and sparse ids") {
  ResistorNetwork net = parse_network("# header\n\n10 20 0.5  # trailing\n20 30 2\n");
  CHECK(net.vertex_count() == 3);
  CHECK(net.label(0) == "10");
  CHECK(net.label(2) == "30");
  CHECK(net.edges()[0].r == Rational(1, 2));
}

TEST_CASE("parse_network vertex declarations") {
  ResistorNetwork net = parse_network("vertex 0 left\nvertex 5\n0 1 1\n");
  CHECK(net.vertex_count() == 3);
  CHECK(net.label(0) == "left");
  CHECK(net.find("5").has_value());
  CHECK(net.degree(*net.find("5")) == 0);
}

TEST_CASE("parse_network errors carry line numbers") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_network(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("0 1 1\n0 1 0\n") == 2);
  CHECK(line_of("0 1\n") == 1);
  CHECK(line_of("0 x 1\n") == 1);
  CHECK(line_of("0 1 1\n\n1 1 1\n") == 3);
  CHECK(line_of("0 1 -1\n") == 1);
  CHECK(line_of("0 1 1 bogus\n") == 1);
  CHECK(line_of("vertex 0 a\nvertex 0 b\n") == 2);
  CHECK(line_of("vertex 0 a\nvertex 1 a\n") == 2);
}

TEST_CASE("render then parse round-trips") {
  std::mt19937_64 rng(3);
  std::vector<ResistorNetwork> nets = {path(4), block_tower(3), fan(3, 2), join(path(2), empty_graph(3))};
  for (int i = 0; i < 10; ++i) nets.push_back(oracle::random_network(rng, 2 + i, i));
  ResistorNetwork gadget = parse_network("0 1 1/3\n1 2 -1/6 gadget\nvertex 7 lone\n");
  nets.push_back(gadget);
  for (const auto& net : nets) {
    CHECK(parse_network(render_network(net)) == net);
  }
}

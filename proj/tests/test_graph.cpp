#include <doctest.h>

#include <string>
#include <vector>

#include "common/fixtures.hpp"
#include "plumbing/errors.hpp"
#include "plumbing/graph.hpp"

using namespace plumbing;

TEST_SUITE("graph") {

TEST_CASE("parse handles comments, blank lines and forward references") {
  auto g = PlumbingGraph::parse(R"(
# leading comment
edge a b

vertex a -2
vertex b -3
)");
  CHECK(g.size() == 2);
  CHECK(g.id(0) == "a");
  CHECK(g.weight(1) == -3);
  CHECK(g.edges().size() == 1);
  CHECK(g.degree(0) == 1);
}

TEST_CASE("to_text round-trips") {
  auto g = fixtures::two_branch();
  auto h = PlumbingGraph::parse(g.to_text());
  CHECK(h.size() == g.size());
  CHECK(intersection_matrix(h) == intersection_matrix(g));
  for (int v = 0; v < g.size(); ++v) CHECK(h.id(v) == g.id(v));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(PlumbingGraph::parse(""), ParseError);
  CHECK_THROWS_AS(PlumbingGraph::parse("vortex a -2"), ParseError);
  CHECK_THROWS_AS(PlumbingGraph::parse("vertex a"), ParseError);
  CHECK_THROWS_AS(PlumbingGraph::parse("vertex a -2\nvertex a -3"), ParseError);
  CHECK_THROWS_AS(PlumbingGraph::parse("vertex a 2"), ParseError);   // framing must be <= -1
  CHECK_THROWS_AS(PlumbingGraph::parse("vertex a -2\nedge a a"), ParseError);
  CHECK_THROWS_AS(PlumbingGraph::parse(
      "vertex a -2\nvertex b -2\nedge a b\nedge b a"), ParseError);  // duplicate edge
  CHECK_THROWS_AS(PlumbingGraph::parse(
      "vertex a -2\nvertex b -2\nedge a c"), ParseError);            // undeclared endpoint
  CHECK_THROWS_AS(PlumbingGraph::parse(
      "vertex a -2\nvertex b -2"), ParseError);                      // disconnected
  // cycles have |E| != N - 1
  CHECK_THROWS_AS(PlumbingGraph::parse(
      "vertex a -2\nvertex b -2\nvertex c -2\nedge a b\nedge b c\nedge c a"), ParseError);
}

TEST_CASE("parse errors carry the offending line") {
  try {
    PlumbingGraph::parse("vertex a -2\nvortex b -3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("determinants of the reference graphs") {
  CHECK(determinant(fixtures::twin_minus_one()) == -1);
  CHECK(determinant(fixtures::twin_star()) == 2304);
  CHECK(determinant(fixtures::chain({-3, -2})) == 5);
  CHECK(determinant(fixtures::chain({-2, -2, -2})) == -4);
}

TEST_CASE("negative definiteness") {
  CHECK(is_negative_definite(fixtures::two_branch()));
  CHECK(is_negative_definite(fixtures::twin_minus_one()));
  CHECK(is_negative_definite(fixtures::twin_star()));
  CHECK(is_negative_definite(fixtures::chain({-1, -2})));
  // -2 center with five (-2)-legs: e = 1/2 > 0, indefinite
  CHECK_FALSE(is_negative_definite(fixtures::star(-2, 5)));
  // -2 center with four (-2)-legs: e = 0, degenerate
  CHECK_FALSE(is_negative_definite(fixtures::star(-2, 4)));
  CHECK_FALSE(is_negative_definite(fixtures::chain({-1, -1})));
}

TEST_CASE("minimality and bad vertices") {
  auto g = fixtures::twin_minus_one();
  CHECK_FALSE(is_minimal(g));
  auto bad = bad_vertices(g);
  REQUIRE(bad.size() == 2);
  CHECK(g.id(bad[0]) == "v1");
  CHECK(g.id(bad[1]) == "v4");
  CHECK_FALSE(is_almost_rational_proxy(g));

  CHECK(is_minimal(fixtures::two_branch()));
  CHECK(bad_vertices(fixtures::two_branch()).empty());
  CHECK(is_almost_rational_proxy(fixtures::two_branch()));

  // both (-2)-centers have degree 4
  CHECK(bad_vertices(fixtures::twin_star()).size() == 2);
  CHECK_FALSE(is_almost_rational_proxy(fixtures::twin_star()));

  // a -7 center of degree 4 is fine
  CHECK(bad_vertices(fixtures::star(-7, 4)).empty());
  CHECK(is_almost_rational_proxy(fixtures::star(-7, 4)));
}

TEST_CASE("index_of resolves declared ids") {
  auto g = fixtures::twin_minus_one();
  CHECK(g.index_of("v0") == 3);
  CHECK(g.id(3) == "v0");
  CHECK_THROWS_AS(g.index_of("nope"), MathError);
}

}  // TEST_SUITE

#ifndef PLUMBING_TESTS_FIXTURES_HPP
#define PLUMBING_TESTS_FIXTURES_HPP

#include <utility>
#include <vector>

#include "plumbing/graph.hpp"

namespace fixtures {

// Two (-4)-branch vertices, each carrying three (-2)-leaves, joined through
// one of the leaves.  Rational homology sphere with theta = 2/3.
inline plumbing::PlumbingGraph two_branch() {
  return plumbing::PlumbingGraph::parse(R"(
vertex v1 -2
vertex v2 -4
vertex v3 -2
vertex v4 -2
vertex v5 -4
vertex v6 -2
vertex v7 -2
vertex v8 -2
edge v1 v2
edge v2 v3
edge v2 v4
edge v2 v5
edge v5 v6
edge v5 v7
edge v5 v8
)");
}

// Integral homology sphere (determinant -1) with two (-1)-framed branch
// vertices hanging off a central -13.  Not minimal; theta = -10.
inline plumbing::PlumbingGraph twin_minus_one() {
  return plumbing::PlumbingGraph::parse(R"(
vertex v2 -2
vertex v3 -3
vertex v1 -1
vertex v0 -13
vertex v4 -1
vertex v5 -2
vertex v6 -3
edge v1 v2
edge v1 v3
edge v0 v1
edge v0 v4
edge v4 v5
edge v4 v6
)");
}

// Two adjacent (-2)-centers with three (-4)-leaves each.  Both centers are
// bad vertices, so the d-invariant lower bound is strict: theta = -18 but
// d = 2, a gap of 6.
inline plumbing::PlumbingGraph twin_star() {
  return plumbing::PlumbingGraph::parse(R"(
vertex v1 -4
vertex v2 -4
vertex v3 -4
vertex v4 -2
vertex v5 -2
vertex v6 -4
vertex v7 -4
vertex v8 -4
edge v1 v4
edge v2 v4
edge v3 v4
edge v4 v5
edge v5 v6
edge v5 v7
edge v5 v8
)");
}

// Linear chain with the given framings.
inline plumbing::PlumbingGraph chain(const std::vector<long long>& weights) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < static_cast<int>(weights.size()); ++i) edges.push_back({i, i + 1});
  return plumbing::PlumbingGraph::from_weights(weights, edges);
}

// Central -b vertex with `legs` single (-2)-leaves.
inline plumbing::PlumbingGraph star(long long b, int legs) {
  std::vector<long long> weights(1 + legs, -2);
  weights[0] = b;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= legs; ++i) edges.push_back({0, i});
  return plumbing::PlumbingGraph::from_weights(weights, edges);
}

}  // namespace fixtures

#endif

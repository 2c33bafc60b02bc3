#ifndef PLUMBING_RECURSION_HPP
#define PLUMBING_RECURSION_HPP

#include <vector>

#include "plumbing/graph.hpp"
#include "plumbing/matrix.hpp"

namespace plumbing {

/// Rooted view of a plumbing tree.  children lists keep declaration order;
/// topo_order lists every vertex after all of its children (leaves first).
struct RootedTree {
  int root = 0;
  std::vector<int> parent;  // -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<int> topo_order;
};

RootedTree root_tree(const PlumbingGraph& g, int root);

/// Per-vertex state of the leaf-to-root pass:
///   alpha_v = 1 / (a_v - sum_c alpha_c)      (continuant ratio, > 0)
///   s_v     = (a_v - 2) - sum_c beta_c
///   beta_v  = -alpha_v * s_v
struct NodeState {
  Rational alpha, s, beta;
};

/// Runs the recursion; throws MathError(nonpositive_denominator) naming the
/// offending vertex when a_v - sum_c alpha_c <= 0 (graph not negative
/// definite along this order).
std::vector<NodeState> recursion_pass(const PlumbingGraph& g, const RootedTree& t);

/// theta = (N - 2) - sum_v alpha_v s_v^2, rooted at `root`
/// (default: first declared vertex).  Root choice does not affect the value.
Rational theta_tree(const PlumbingGraph& g, int root = 0);

/// The per-vertex contributions alpha_v s_v^2 (declaration order) and their
/// sum; theta = (N - 2) - sum.
struct ContributionTable {
  std::vector<Rational> values;
  Rational sum;
};
ContributionTable contribution_table(const PlumbingGraph& g, const RootedTree& t);

/// Cross-checks the recursion state against dense subtree solves:
/// alpha_v = -(Q_v^{-1})_{vv} and beta_v = (Q_v^{-1} z_v)_v for every rooted
/// subtree, where z_v is the canonical vector of the subtree.
bool subtree_alpha_check(const PlumbingGraph& g, const RootedTree& t);

}  // namespace plumbing

#endif

#include "plumbing/recursion.hpp"

#include <algorithm>

#include "plumbing/errors.hpp"
#include "plumbing/lattice.hpp"

namespace plumbing {

RootedTree root_tree(const PlumbingGraph& g, int root) {
  const int n = g.size();
  if (root < 0 || root >= n)
    throw MathError(MathError::Code::domain, "root index out of range");
  RootedTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  std::vector<int> bfs{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    const int v = bfs[i];
    for (int w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent[w] = v;
      t.children[v].push_back(w);
      bfs.push_back(w);
    }
  }
  // BFS emits parents before children, so the reverse is leaves-first.
  t.topo_order.assign(bfs.rbegin(), bfs.rend());
  return t;
}

std::vector<NodeState> recursion_pass(const PlumbingGraph& g, const RootedTree& t) {
  std::vector<NodeState> state(g.size());
  for (int v : t.topo_order) {
    const Rational a(-g.weight(v));
    Rational den = a;
    Rational beta_sum(0);
    for (int c : t.children[v]) {
      den -= state[c].alpha;
      beta_sum += state[c].beta;
    }
    if (den <= 0)
      throw MathError(MathError::Code::nonpositive_denominator,
                      "nonpositive recursion denominator at vertex \"" + g.id(v) +
                          "\" (graph not negative definite)",
                      g.id(v));
    state[v].alpha = Rational(1) / den;
    state[v].s = a - 2 - beta_sum;
    state[v].beta = -state[v].alpha * state[v].s;
  }
  return state;
}

Rational theta_tree(const PlumbingGraph& g, int root) {
  const auto t = root_tree(g, root);
  const auto state = recursion_pass(g, t);
  Rational sum(0);
  for (int v = 0; v < g.size(); ++v) sum += state[v].alpha * state[v].s * state[v].s;
  return Rational(g.size() - 2) - sum;
}

ContributionTable contribution_table(const PlumbingGraph& g, const RootedTree& t) {
  const auto state = recursion_pass(g, t);
  ContributionTable table;
  table.values.resize(g.size());
  table.sum = 0;
  for (int v = 0; v < g.size(); ++v) {
    table.values[v] = state[v].alpha * state[v].s * state[v].s;
    table.sum += table.values[v];
  }
  return table;
}

bool subtree_alpha_check(const PlumbingGraph& g, const RootedTree& t) {
  const auto state = recursion_pass(g, t);
  const int n = g.size();
  // Collect each rooted subtree's vertex set by accumulating along topo order.
  std::vector<std::vector<int>> subtree(n);
  for (int v : t.topo_order) {
    subtree[v].push_back(v);
    for (int c : t.children[v])
      subtree[v].insert(subtree[v].end(), subtree[c].begin(), subtree[c].end());
    std::sort(subtree[v].begin(), subtree[v].end());
  }
  const IntMatrix q = intersection_matrix(g);
  for (int v = 0; v < n; ++v) {
    const auto& verts = subtree[v];
    const std::size_t m = verts.size();
    RatMatrix qv(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) qv(i, j) = Rational(q(verts[i], verts[j]));
    const std::size_t pos = std::lower_bound(verts.begin(), verts.end(), v) - verts.begin();
    RatVector ev(m, Rational(0));
    ev[pos] = 1;
    if (state[v].alpha != -solve_linear(qv, ev)[pos]) return false;
    RatVector zv(m);
    for (std::size_t i = 0; i < m; ++i) zv[i] = Rational(-g.weight(verts[i]) - 2);
    if (state[v].beta != solve_linear(qv, zv)[pos]) return false;
  }
  return true;
}

}  // namespace plumbing

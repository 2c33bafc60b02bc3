#include "plumbing/theta_two.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "plumbing/errors.hpp"
#include "plumbing/recursion.hpp"

namespace plumbing {

namespace {

void validate(const SymmetricStar& s) {
  if (s.ell < 1 || s.k < 1 || s.b < 1)
    throw MathError(MathError::Code::domain,
                    "symmetric star needs l >= 1, k >= 1, b >= 1");
}

}  // namespace

SeifertData star_data(const SymmetricStar& s) {
  validate(s);
  SeifertData d;
  d.e0 = -s.b;
  const long long k = s.k.convert_to<long long>();
  for (long long i = 0; i < k; ++i) d.legs.emplace_back(s.ell + 1, s.ell);
  return d;
}

Rational symmetric_theta(const SymmetricStar& s) {
  validate(s);
  const Rational e = Rational(-s.b) + Rational(s.k * s.ell, s.ell + 1);
  if (e >= 0)
    throw MathError(MathError::Code::euler_not_negative,
                    "symmetric star requires e < 0");
  const Rational b2 = Rational(s.b - 2);
  return Rational(s.k * s.ell - 1) + b2 * b2 / e;
}

std::pair<Integer, Integer> condition_sides(const SymmetricStar& s) {
  validate(s);
  const Integer lhs = (s.ell + 1) * (s.b - 2) * (s.b - 2);
  const Integer rhs = (s.k * s.ell + 1) * ((s.ell + 1) * s.b - s.k * s.ell);
  return {lhs, rhs};
}

bool condition_theta_two(const SymmetricStar& s) {
  const auto [lhs, rhs] = condition_sides(s);
  return lhs == rhs;
}

SymmetricStar family(const Integer& ell, int id) {
  if (ell < 1) throw MathError(MathError::Code::domain, "family needs l >= 1");
  switch (id) {
    case 1:
      return {ell, 4 * ell + 4, 4 * ell + 4};
    case 2:
      return {ell, ell * ell + 3 * ell + 3, ell * ell + 3 * ell + 4};
    case 3:
      return {ell, 4 * ell * ell - 3, 4 * ell * ell + 1};
    default:
      throw MathError(MathError::Code::domain, "family id must be 1, 2 or 3");
  }
}

std::vector<StarHit> search_theta_two(const Integer& max_vertices, bool include_small_k) {
  std::vector<StarHit> hits;
  const Integer k_min = include_small_k ? 1 : 3;
  for (Integer ell = 1; 1 + k_min * ell <= max_vertices; ++ell) {
    for (Integer k = k_min; 1 + k * ell <= max_vertices; ++k) {
      // Condition as a quadratic in b: A b^2 + B b + C = 0.
      const Integer a = ell + 1;
      const Integer bcoef = -(ell + 1) * (4 + k * ell + 1);
      const Integer ccoef = 4 * (ell + 1) + k * ell * (k * ell + 1);
      const Integer disc = bcoef * bcoef - 4 * a * ccoef;
      if (disc < 0) continue;
      const Integer b_hi = (-bcoef + isqrt(disc)) / (2 * a);
      Integer b_lo = (k * ell) / (ell + 1) + 1;  // smallest b with e < 0
      if (b_lo < 1) b_lo = 1;
      for (Integer b = b_lo; b <= b_hi; ++b) {
        const SymmetricStar star{ell, k, b};
        if (!condition_theta_two(star)) continue;
        StarHit hit;
        hit.star = star;
        hit.vertices = 1 + k * ell;
        hit.verified = theta_tree(star_graph(star_data(star))) == -2;
        hits.push_back(hit);
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const StarHit& x, const StarHit& y) {
    auto key = [](const StarHit& h) {
      return std::make_tuple(h.vertices, h.star.ell, h.star.k, h.star.b);
    };
    return key(x) < key(y);
  });
  return hits;
}

namespace {

// Canonical encoding of a rooted weighted tree: "(w" + sorted child codes + ")".
std::string encode_rooted(const PlumbingGraph& g, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int w : g.neighbors(v))
    if (w != parent) child_codes.push_back(encode_rooted(g, w, v));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(" + g.weight(v).str();
  for (const auto& c : child_codes) code += c;
  return code + ")";
}

// Isomorphism-invariant encoding of a weighted free tree: root at the
// centroid(s) and take the lexicographically smaller encoding.
std::string encode_free(const PlumbingGraph& g) {
  const int n = g.size();
  if (n == 1) return encode_rooted(g, 0, -1);
  // Centroid(s) by repeated leaf stripping.
  std::vector<int> deg(n), order;
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> layer;
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int w : g.neighbors(v))
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = next;
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  std::string best;
  for (int c : centers) {
    std::string code = encode_rooted(g, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<PlumbingGraph> search_trees_theta_two(int max_vertices, long long min_weight,
                                                  std::uint64_t cap) {
  if (max_vertices < 1 || min_weight > -1)
    throw MathError(MathError::Code::domain,
                    "tree search needs max_vertices >= 1 and min_weight <= -1");
  std::uint64_t budget = cap;
  std::vector<PlumbingGraph> hits;
  std::set<std::string> seen;

  auto consider = [&](const std::vector<long long>& weights,
                      const std::vector<std::pair<int, int>>& edges) {
    if (budget == 0) throw CapError("tree enumeration exceeded its cap");
    --budget;
    PlumbingGraph g = PlumbingGraph::from_weights(weights, edges);
    const std::string code = encode_free(g);
    if (!seen.insert(code).second) return;
    try {
      if (theta_tree(g) == -2) hits.push_back(std::move(g));
    } catch (const MathError&) {
      // not negative definite along the recursion; skip
    }
  };

  for (int n = 1; n <= max_vertices; ++n) {
    // Labeled trees via parent sequences: vertex i >= 1 attaches to some
    // earlier vertex.  This covers every labeled tree shape on n vertices
    // (with duplicates), and the canonical-code dedup collapses isomorphs.
    std::vector<int> parent(n, 0);
    std::vector<long long> weights(n, -1);
    auto weight_sweep = [&](auto&& self, int v, const std::vector<std::pair<int, int>>& edges) -> void {
      if (v == n) {
        consider(weights, edges);
        return;
      }
      for (long long w = min_weight; w <= -1; ++w) {
        weights[v] = w;
        self(self, v + 1, edges);
      }
    };
    auto shape_sweep = [&](auto&& self, int v) -> void {
      if (v == n) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < n; ++i) edges.emplace_back(parent[i], i);
        weight_sweep(weight_sweep, 0, edges);
        return;
      }
      for (int p = 0; p < v; ++p) {
        parent[v] = p;
        self(self, v + 1);
      }
    };
    shape_sweep(shape_sweep, 1);
  }
  std::sort(hits.begin(), hits.end(), [](const PlumbingGraph& a, const PlumbingGraph& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return encode_free(a) < encode_free(b);
  });
  return hits;
}

}  // namespace plumbing

#ifndef PLUMBING_THETA_TWO_HPP
#define PLUMBING_THETA_TWO_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "plumbing/graph.hpp"
#include "plumbing/rational.hpp"
#include "plumbing/seifert.hpp"

namespace plumbing {

/// Symmetric star Y(-b; ((l+1)/l)^k): central framing -b, k equal legs of
/// l many (-2)-vertices; 1 + k*l vertices in total.
struct SymmetricStar {
  Integer ell;  // >= 1
  Integer k;    // >= 1 legs
  Integer b;    // >= 1, central framing -b
};

/// Seifert data of the star: (-b; (l/(l+1))^k).
SeifertData star_data(const SymmetricStar& s);

/// theta = k*l - 1 + (b - 2)^2 / e with e = -b + k*l/(l+1); requires e < 0.
Rational symmetric_theta(const SymmetricStar& s);

/// theta = -2 is equivalent (for e < 0) to the Diophantine identity
///   (l+1)(b-2)^2 = (k*l+1)((l+1) b - k*l).
/// Returns the two sides so callers can report them.
std::pair<Integer, Integer> condition_sides(const SymmetricStar& s);
bool condition_theta_two(const SymmetricStar& s);

/// The three infinite families, id in {1, 2, 3}:
///   1: (l, 4l+4, 4l+4)   2: (l, l^2+3l+3, k+1)   3: (l, 4l^2-3, k+4)
SymmetricStar family(const Integer& ell, int id);

struct StarHit {
  SymmetricStar star;
  Integer vertices;  // 1 + k*l
  bool verified;     // theta_tree on the assembled star equals -2
};

/// All (l, k, b) with 1 + k*l <= max_vertices, e < 0 and theta = -2.
/// k starts at 3 unless include_small_k.  Each b-range is exact: the
/// condition is quadratic in b with positive leading coefficient, so only
/// b up to its larger root can work.  Sorted by vertex count, then (l, k, b).
std::vector<StarHit> search_theta_two(const Integer& max_vertices,
                                      bool include_small_k = false);

/// Experimental: exhaustive sweep over weighted free trees with at most
/// max_vertices vertices and framings in [min_weight, -1], keeping those with
/// theta = -2.  Trees are deduplicated up to isomorphism (canonical rooted
/// encoding at the centroid); throws CapError past `cap` candidate trees.
std::vector<PlumbingGraph> search_trees_theta_two(int max_vertices, long long min_weight,
                                                  std::uint64_t cap = 1000000);

}  // namespace plumbing

#endif

#ifndef PLUMBING_DINVARIANT_HPP
#define PLUMBING_DINVARIANT_HPP

#include <cstdint>

#include "plumbing/graph.hpp"
#include "plumbing/matrix.hpp"

namespace plumbing {

/// k^2 for the characteristic vector k = K + 2Qc, K the canonical vector:
/// computed as (K + 2Qc)^T Q^{-1} (K + 2Qc) and cross-asserted against the
/// expanded form K^2 + 4 c.K + 4 c^T Q c.
Rational k_squared_of(const PlumbingGraph& g, const IntVector& c);

struct LatticeMax {
  Rational max_k_squared;
  IntVector argmax;          // lexicographically smallest maximizer
  std::uint64_t explored = 0;  // complete lattice points evaluated
  std::uint64_t steps = 0;     // enumeration loop iterations spent
};

inline constexpr std::uint64_t kDefaultLatticeSteps = 2'000'000;

/// Maximizes k^2 over c in Z^N.  k^2 is strictly concave with real maximum 0
/// at c* = -Q^{-1}K/2, so the integer maximum lies in the ellipsoid
/// (c - c*)^T (-4Q) (c - c*) <= -best; enumerated exactly (rational LDL^T,
/// integer-sqrt coordinate bounds), seeded at c = 0 and c = round(c*).
///
/// The enumeration budget guards against degenerate inputs (heavily blown-up
/// graphs tie the maximum across exponentially many lattice points); throws
/// CapError when exceeded.  Comfortable through N ~ 20 on minimal graphs.
LatticeMax max_k_squared(const PlumbingGraph& g,
                         std::uint64_t step_limit = kDefaultLatticeSteps);

/// d(Y, canonical spin-c) = (max k^2 + N) / 4, via cited formula.
Rational d_canonical(const PlumbingGraph& g);

/// (theta + 2) / 4: lower bound for d, sharp iff the gap vanishes.
Rational d_lower_bound(const PlumbingGraph& g);

/// d_canonical - d_lower_bound = (max k^2 - K^2)/4 >= 0; zero iff the
/// canonical vector already realizes the maximum.
Rational d_gap(const PlumbingGraph& g);

}  // namespace plumbing

#endif

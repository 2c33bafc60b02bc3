#ifndef PLUMBING_ROTATIONS_HPP
#define PLUMBING_ROTATIONS_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "plumbing/graph.hpp"
#include "plumbing/matrix.hpp"

namespace plumbing {

/// Rotation vectors live in the box |z_v| <= a_v - 2; with the parity
/// constraint z_v = a_v (mod 2) they are the tight-transverse candidates.
/// Requires a minimal graph (every a_v >= 2).

/// Number of vectors: product of (a_v - 1) with parity, (2 a_v - 3) without.
Integer rotation_count(const PlumbingGraph& g, bool parity = true);

/// Streams vectors in ascending lexicographic order (vertex 0 most
/// significant).  Throws CapError if the count exceeds `cap`.
void enumerate_rotations(const PlumbingGraph& g, bool parity, std::uint64_t cap,
                         const std::function<void(const IntVector&)>& visit);

/// theta(z) = z^T Q^{-1} z + N - 2.  Validates the box constraint; parity is
/// deliberately not required so the plain algebraic inequality can be probed.
Rational theta_of_rotation(const PlumbingGraph& g, const IntVector& z);

enum class DiagramClass { consistent, inconsistent };

/// consistent iff z = +-(canonical vector).
DiagramClass classify(const PlumbingGraph& g, const IntVector& z);

/// theta(z) != -2 obstructs z from bounding a rational homology ball
/// symplectic filling.
bool rhb_obstructed(const PlumbingGraph& g, const IntVector& z);

struct MinimizationReport {
  bool holds = false;              // theta(+-c) strictly below every other theta(z)
  Rational theta_canonical;
  std::optional<Rational> min_other_theta;  // min over z not in {c, -c}
  std::optional<Rational> gap;              // min_other_theta - theta_canonical
  std::uint64_t enumerated = 0;
  std::optional<IntVector> witness;  // lexicographically smallest violator
};

/// Exhaustively checks strict minimality of theta at the canonical rotation
/// vectors over the (parity-constrained) box.  Requires minimal + negative
/// definite; throws CapError when the box exceeds `cap`.
MinimizationReport verify_minimization(const PlumbingGraph& g, bool parity = true,
                                       std::uint64_t cap = 1000000);

}  // namespace plumbing

#endif

#ifndef PLUMBING_LATTICE_HPP
#define PLUMBING_LATTICE_HPP

#include <string>
#include <utility>
#include <vector>

#include "plumbing/contfrac.hpp"
#include "plumbing/graph.hpp"
#include "plumbing/matrix.hpp"

namespace plumbing {

/// Canonical class in the dual basis: component a_v - 2 per vertex, in
/// declaration order.
IntVector canonical_vector(const PlumbingGraph& g);

/// Exact x with Q x = b; throws MathError(singular_matrix) if det Q = 0.
RatVector solve(const IntMatrix& q, const RatVector& b);

/// z^T Q^{-1} z, exact.
Rational quad_form_inv(const IntMatrix& q, const IntVector& z);

/// Dense-route theta: z^T Q^{-1} z + N - 2 for z the canonical vector.
/// Requires a negative-definite graph.
Rational theta_oracle(const PlumbingGraph& g);

/// Entrywise positivity of -Q^{-1} (irreducible Stieltjes property).
/// Requires a negative-definite graph.
bool stieltjes_positive(const PlumbingGraph& g);

/// Closed forms for one leg chain A with weights -a_1..-a_n, w_i = a_i - 2,
/// u = e_1, p/q the evaluated fraction, q* = inverse_mod(q, p):
///   w^T A^{-1} w = 2 - I(p/q) - n - (q + q* + 2)/p
///   u^T A^{-1} w = (q + 1 - p)/p
/// Returned as (w^T A^{-1} w, u^T A^{-1} w).
std::pair<Rational, Rational> leg_closed_form(const HJExpansion& e);

/// Same two values by an exact tridiagonal solve (independent route).
std::pair<Rational, Rational> leg_oracle(const HJExpansion& e);

/// One leg of a star together with a vector z supported on it.
struct SchurLeg {
  HJExpansion expansion;
  RatVector z;  // length = expansion.terms.size(), first entry = vertex nearest the center
};

/// z^T Q^{-1} z for the star with central framing e0 and the given legs,
/// assembled through the Schur complement
///   Delta = e0 + sum_i q_i/p_i,
///   z^T Q^{-1} z = sum_i z_i^T A_i^{-1} z_i
///                + (z_0 - sum_i u_i^T A_i^{-1} z_i)^2 / Delta.
/// Throws MathError(zero_euler_number) when Delta = 0.
Rational schur_decompose(const Integer& e0, const std::vector<SchurLeg>& legs,
                         const Rational& z0);

/// Checks that phi describes an embedding into the standard negative-definite
/// lattice Z^N, diag(-1): pairings match adjacency, self-pairings match the
/// framings, and each row satisfies the adjunction relation
/// Q(phi(v), K) + Q(phi(v), phi(v)) = -2 with K = sum of the basis vectors.
/// Collects human-readable failures when a sink is supplied.
bool verify_ssw_embedding(const PlumbingGraph& g, const std::vector<IntVector>& phi,
                          std::vector<std::string>* failures = nullptr);

}  // namespace plumbing

#endif

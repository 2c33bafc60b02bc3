#ifndef PLUMBING_SEIFERT_HPP
#define PLUMBING_SEIFERT_HPP

#include <vector>

#include "plumbing/contfrac.hpp"
#include "plumbing/graph.hpp"

namespace plumbing {

/// Normalized Seifert invariants (e0; q_1/p_1, ..., q_k/p_k) with every
/// fraction in (0, 1).  k = 0 (no legs) is allowed.
struct SeifertData {
  Integer e0;
  std::vector<CoprimePair> legs;  // leg i carries r_i = q_i / p_i
};

/// Reduces raw fractions mod 1 into (0,1), absorbing integer parts into e0;
/// fractions must be positive, integer fractions dissolve into e0 entirely.
SeifertData normalize(const Integer& e0_raw, const std::vector<Rational>& fractions);

/// e(Y) = e0 + sum q_i/p_i.
Rational euler_number(const SeifertData& s);

/// Closed form for theta of the canonical contact structure:
///   theta = (2k - 1) - sum_i (I(p_i/q_i) + (q_i + q_i* + 2)/p_i)
///         + (-e0 + k - 2 - sum_i (q_i + 1)/p_i)^2 / e(Y).
/// Requires e0 <= -1 and e(Y) < 0 (distinct errors for each).
Rational theta_seifert(const SeifertData& s);

/// Independent closed form through Dedekind sums:
///   theta = (2 - k + sum_i 1/p_i)^2 / e + e + 3 - 12 sum_i s(q_i, p_i).
/// Requires e(Y) < 0.
Rational theta_nn(const SeifertData& s);

/// The star-shaped plumbing graph: central vertex with framing e0, one chain
/// per leg from the expansion of p_i/q_i.  Requires e0 <= -1.
PlumbingGraph star_graph(const SeifertData& s);

/// Lens space specialization: theta = -I(p/q) - (q + q* + 2)/p.
Rational lens_theta(const CoprimePair& pq);

/// Small Seifert space (e0; 1/2, q0/p0, 1/2), e0 <= -2.  With
/// p/q = [-e0, a_1, ..., a_n] for [a_1, ..., a_n] the expansion of p0/q0:
///   theta = 1 - I(p/q) - 1/[a_n, ..., a_1, -e0 - 1],
/// the bracket term equal to q*/(p - q), q* the inverse of q mod p - q,
/// whenever p - q > 1.
Rational dihedral_theta(const Integer& e0, const CoprimePair& r);

/// Small Seifert space (e0; q1/p1, q2/p2, (p1-q1)/p1) with complementary outer
/// legs, e0 <= -2; cf2 expands p2/q2.  Independent of q1:
///   theta = 1 - I(p/q) - 1/[a_n2, ..., a_1, -e0 - 1]
///         + 2 (p1 - 2)/(p1 (p - q)) - (p1 - 2)^2 q / (p1^2 (p - q)),
/// where p/q = [-e0, a_1, ..., a_n2].
Rational complementary_theta(const Integer& e0, const Integer& p1, const HJExpansion& cf2);

}  // namespace plumbing

#endif

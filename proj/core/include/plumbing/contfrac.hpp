#ifndef PLUMBING_CONTFRAC_HPP
#define PLUMBING_CONTFRAC_HPP

#include <vector>

#include "plumbing/rational.hpp"

namespace plumbing {

/// A reduced fraction p/q with p > q >= 1, gcd(p, q) = 1.
struct CoprimePair {
  Integer p, q;
  CoprimePair(Integer p_, Integer q_);  // validates the invariants

  bool operator==(const CoprimePair&) const = default;
};

/// Negative continued-fraction expansion [a_1, ..., a_n] with every a_i >= 2,
/// denoting a_1 - 1/(a_2 - 1/(... - 1/a_n)).
struct HJExpansion {
  std::vector<Integer> terms;
  explicit HJExpansion(std::vector<Integer> t);  // validates nonempty, all >= 2

  bool operator==(const HJExpansion&) const = default;
};

/// Expands p/q by the ceiling recurrence a = ceil(p/q), (p, q) <- (q, a*q - p).
HJExpansion hj_expand(const CoprimePair& pq);

/// Evaluates an expansion back to its fraction.  Right-to-left; exact.
CoprimePair hj_eval(const HJExpansion& e);

/// Evaluates a general bracket t_1 - 1/(t_2 - ...) for terms that need not be
/// >= 2 (e.g. a trailing term of 1).  Throws on a vanishing tail.
Rational continued_fraction_value(const std::vector<Integer>& terms);

/// Multiplicative inverse of q mod p, normalized into (0, p).
/// Convention: p = 1 returns 0.  Throws MathError(non_coprime) otherwise
/// when gcd(q, p) != 1.
Integer inverse_mod(const Integer& q, const Integer& p);

/// sum of (a_i - 3) over the expansion.
Integer i_sum(const HJExpansion& e);

/// Dedekind sum s(q, p) = sum_{k=1}^{p-1} ((k/p))((kq/p)), computed by direct
/// summation.  Requires p >= 1 and gcd(q, p) = 1; q may be any integer.
Rational dedekind_sum(const Integer& q, const Integer& p);

/// Checks 12*s(q,p) = I(p/q) + (q + q*)/p exactly.
bool hz_check(const CoprimePair& pq);

}  // namespace plumbing

#endif

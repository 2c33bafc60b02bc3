#include "plumbing/contfrac.hpp"

#include <utility>

#include "plumbing/errors.hpp"

namespace plumbing {

CoprimePair::CoprimePair(Integer p_, Integer q_) : p(std::move(p_)), q(std::move(q_)) {
  if (!(p > q && q >= 1))
    throw MathError(MathError::Code::invalid_pair,
                    "coprime pair requires p > q >= 1, got " + p.str() + "/" + q.str());
  if (gcd(p, q) != 1)
    throw MathError(MathError::Code::invalid_pair,
                    "pair " + p.str() + "/" + q.str() + " is not in lowest terms");
}

HJExpansion::HJExpansion(std::vector<Integer> t) : terms(std::move(t)) {
  if (terms.empty())
    throw MathError(MathError::Code::domain, "empty continued-fraction expansion");
  for (const Integer& a : terms)
    if (a < 2)
      throw MathError(MathError::Code::domain,
                      "continued-fraction term " + a.str() + " < 2");
}

HJExpansion hj_expand(const CoprimePair& pq) {
  std::vector<Integer> terms;
  Integer p = pq.p, q = pq.q;
  while (q > 0) {
    // ceil(p/q) for positive p, q
    Integer a = (p + q - 1) / q;
    terms.push_back(a);
    Integer next = a * q - p;
    p = q;
    q = next;
  }
  return HJExpansion(std::move(terms));
}

CoprimePair hj_eval(const HJExpansion& e) {
  Rational v(e.terms.back());
  for (auto it = std::next(e.terms.rbegin()); it != e.terms.rend(); ++it)
    v = Rational(*it) - 1 / v;
  return CoprimePair(numer(v), denom(v));
}

Rational continued_fraction_value(const std::vector<Integer>& terms) {
  if (terms.empty())
    throw MathError(MathError::Code::domain, "empty continued-fraction bracket");
  Rational v(terms.back());
  for (auto it = std::next(terms.rbegin()); it != terms.rend(); ++it) {
    if (v == 0)
      throw MathError(MathError::Code::domain, "continued-fraction tail vanishes");
    v = Rational(*it) - 1 / v;
  }
  return v;
}

Integer inverse_mod(const Integer& q, const Integer& p) {
  if (p < 1) throw MathError(MathError::Code::domain, "modulus must be >= 1");
  if (p == 1) return 0;
  Integer a = q % p;
  if (a < 0) a += p;
  if (gcd(a, p) != 1)
    throw MathError(MathError::Code::non_coprime,
                    q.str() + " is not invertible mod " + p.str());
  // extended Euclid on (a, p)
  Integer r0 = a, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    Integer k = r0 / r1;
    r0 -= k * r1;
    std::swap(r0, r1);
    s0 -= k * s1;
    std::swap(s0, s1);
  }
  Integer inv = s0 % p;
  if (inv < 0) inv += p;
  return inv;
}

Integer i_sum(const HJExpansion& e) {
  Integer s(0);
  for (const Integer& a : e.terms) s += a - 3;
  return s;
}

namespace {

Integer int128_to_mpz(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  Integer hi(static_cast<unsigned long long>(u >> 64));
  Integer lo(static_cast<unsigned long long>(u));
  Integer out = (hi << 64) + lo;
  return neg ? -out : out;
}

}  // namespace

Rational dedekind_sum(const Integer& q, const Integer& p) {
  if (p < 1) throw MathError(MathError::Code::domain, "dedekind_sum requires p >= 1");
  if (gcd(((q % p) + p) % p, p) != 1 && p != 1)
    throw MathError(MathError::Code::non_coprime,
                    "dedekind_sum requires gcd(q, p) = 1");
  if (p > 100000000)
    throw CapError("dedekind_sum: p too large for direct O(p) summation");
  // Over the common denominator 4p^2 the summand is (2k - p)(2m - p) with
  // m = kq mod p, so the whole sum is an integer divided by 4p^2.
  const long long pl = p.convert_to<long long>();
  long long ql = (((q % p) + p) % p).convert_to<long long>();
  __int128 acc = 0;
  long long m = 0;
  for (long long k = 1; k < pl; ++k) {
    m += ql;
    if (m >= pl) m -= pl;
    acc += static_cast<__int128>(2 * k - pl) * (2 * m - pl);
  }
  return Rational(int128_to_mpz(acc), Integer(4) * p * p);
}

bool hz_check(const CoprimePair& pq) {
  const Rational lhs = 12 * dedekind_sum(pq.q, pq.p);
  const Integer qstar = inverse_mod(pq.q, pq.p);
  const Rational rhs = Rational(i_sum(hj_expand(pq))) + Rational(pq.q + qstar, pq.p);
  return lhs == rhs;
}

}  // namespace plumbing

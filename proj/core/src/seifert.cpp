#include "plumbing/seifert.hpp"

#include <algorithm>
#include <string>

#include "plumbing/errors.hpp"

namespace plumbing {

SeifertData normalize(const Integer& e0_raw, const std::vector<Rational>& fractions) {
  SeifertData s;
  s.e0 = e0_raw;
  for (const Rational& r : fractions) {
    if (r <= 0)
      throw MathError(MathError::Code::domain,
                      "leg fraction must be positive, got " + to_fraction_string(r));
    const Integer whole = floor_int(r);
    const Rational part = r - whole;
    s.e0 += whole;
    if (part != 0) s.legs.emplace_back(denom(part), numer(part));
  }
  return s;
}

Rational euler_number(const SeifertData& s) {
  Rational e(s.e0);
  for (const CoprimePair& leg : s.legs) e += Rational(leg.q, leg.p);
  return e;
}

Rational theta_seifert(const SeifertData& s) {
  if (s.e0 > -1)
    throw MathError(MathError::Code::central_weight_range,
                    "theta_seifert requires e0 <= -1, got " + s.e0.str());
  const Rational e = euler_number(s);
  if (e >= 0)
    throw MathError(MathError::Code::euler_not_negative,
                    "theta_seifert requires e(Y) < 0, got " + to_fraction_string(e));
  const long long k = static_cast<long long>(s.legs.size());
  Rational leg_terms(0);
  Rational correction = Rational(-s.e0) + k - 2;
  for (const CoprimePair& leg : s.legs) {
    const Integer qstar = inverse_mod(leg.q, leg.p);
    leg_terms += Rational(i_sum(hj_expand(leg))) + Rational(leg.q + qstar + 2, leg.p);
    correction -= Rational(leg.q + 1, leg.p);
  }
  return Rational(2 * k - 1) - leg_terms + correction * correction / e;
}

Rational theta_nn(const SeifertData& s) {
  const Rational e = euler_number(s);
  if (e >= 0)
    throw MathError(MathError::Code::euler_not_negative,
                    "theta_nn requires e(Y) < 0, got " + to_fraction_string(e));
  const long long k = static_cast<long long>(s.legs.size());
  Rational recip(0), dede(0);
  for (const CoprimePair& leg : s.legs) {
    recip += Rational(Integer(1), leg.p);
    dede += dedekind_sum(leg.q, leg.p);
  }
  const Rational base = Rational(2 - k) + recip;
  return base * base / e + e + 3 - 12 * dede;
}

PlumbingGraph star_graph(const SeifertData& s) {
  if (s.e0 > -1)
    throw MathError(MathError::Code::central_weight_range,
                    "star graph needs a central framing <= -1, got " + s.e0.str());
  std::vector<std::string> ids{"c"};
  std::vector<Integer> weights{s.e0};
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < s.legs.size(); ++i) {
    const HJExpansion e = hj_expand(s.legs[i]);
    int prev = 0;  // center
    for (std::size_t j = 0; j < e.terms.size(); ++j) {
      ids.push_back("l" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      weights.push_back(-e.terms[j]);
      edges.emplace_back(prev, static_cast<int>(ids.size()) - 1);
      prev = static_cast<int>(ids.size()) - 1;
    }
  }
  return PlumbingGraph(std::move(ids), std::move(weights), std::move(edges));
}

Rational lens_theta(const CoprimePair& pq) {
  const Integer qstar = inverse_mod(pq.q, pq.p);
  return Rational(-i_sum(hj_expand(pq))) - Rational(pq.q + qstar + 2, pq.p);
}

namespace {

// 1 / [t_1, ..., t_m] evaluated right-to-left; every tail is >= 1 when the
// terms are >= 2 except possibly a final >= 1, so this never divides by zero.
Rational reciprocal_bracket(std::vector<Integer> terms) {
  return Rational(1) / continued_fraction_value(terms);
}

void require_e0_at_most(const Integer& e0, long long bound, const char* who) {
  if (e0 > bound)
    throw MathError(MathError::Code::central_weight_range,
                    std::string(who) + " requires e0 <= " + std::to_string(bound) +
                        ", got " + e0.str());
}

}  // namespace

Rational dihedral_theta(const Integer& e0, const CoprimePair& r) {
  require_e0_at_most(e0, -2, "dihedral_theta");
  const HJExpansion legs = hj_expand(r);  // expansion of p0/q0 = 1/r
  const Integer p = -e0 * r.p - r.q;
  const Integer q = r.p;
  const Integer isum = i_sum(hj_expand(CoprimePair(p, q)));
  std::vector<Integer> bracket(legs.terms.rbegin(), legs.terms.rend());
  bracket.push_back(-e0 - 1);
  return Rational(1) - Rational(isum) - reciprocal_bracket(std::move(bracket));
}

Rational complementary_theta(const Integer& e0, const Integer& p1, const HJExpansion& cf2) {
  require_e0_at_most(e0, -2, "complementary_theta");
  if (p1 < 2)
    throw MathError(MathError::Code::domain,
                    "complementary_theta requires p1 >= 2, got " + p1.str());
  const CoprimePair p2q2 = hj_eval(cf2);
  const Integer p = -e0 * p2q2.p - p2q2.q;
  const Integer q = p2q2.p;
  const Integer pmq = p - q;
  const Integer isum = i_sum(hj_expand(CoprimePair(p, q)));
  std::vector<Integer> bracket(cf2.terms.rbegin(), cf2.terms.rend());
  bracket.push_back(-e0 - 1);
  return Rational(1) - Rational(isum) - reciprocal_bracket(std::move(bracket)) +
         Rational(2 * (p1 - 2), p1 * pmq) -
         Rational((p1 - 2) * (p1 - 2) * q, p1 * p1 * pmq);
}

}  // namespace plumbing

#include "plumbing/lattice.hpp"

#include <cstddef>

#include "plumbing/errors.hpp"

namespace plumbing {

IntVector canonical_vector(const PlumbingGraph& g) {
  IntVector z(g.size());
  for (int v = 0; v < g.size(); ++v) z[v] = -g.weight(v) - 2;
  return z;
}

RatVector solve(const IntMatrix& q, const RatVector& b) {
  return solve_linear(to_rational(q), b);
}

Rational quad_form_inv(const IntMatrix& q, const IntVector& z) {
  const RatVector zr = to_rational(z);
  return dot(zr, solve(q, zr));
}

Rational theta_oracle(const PlumbingGraph& g) {
  if (!is_negative_definite(g))
    throw MathError(MathError::Code::not_negative_definite,
                    "theta_oracle requires a negative-definite graph");
  return quad_form_inv(intersection_matrix(g), canonical_vector(g)) + g.size() - 2;
}

bool stieltjes_positive(const PlumbingGraph& g) {
  if (!is_negative_definite(g))
    throw MathError(MathError::Code::not_negative_definite,
                    "stieltjes_positive requires a negative-definite graph");
  const RatMatrix inv = invert(to_rational(intersection_matrix(g)));
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j)
      if (-inv(i, j) <= 0) return false;
  return true;
}

std::pair<Rational, Rational> leg_closed_form(const HJExpansion& e) {
  const CoprimePair pq = hj_eval(e);
  const Integer qstar = inverse_mod(pq.q, pq.p);
  const Integer n(static_cast<long long>(e.terms.size()));
  const Rational waw =
      Rational(2) - Rational(i_sum(e)) - Rational(n) - Rational(pq.q + qstar + 2, pq.p);
  const Rational uaw = Rational(pq.q + 1 - pq.p, pq.p);
  return {waw, uaw};
}

namespace {

// Exact Thomas-style solve of the tridiagonal system A x = rhs where
// A has diagonal -a_i and unit off-diagonals.
RatVector tridiag_solve(const std::vector<Integer>& a, RatVector rhs) {
  const std::size_t n = a.size();
  RatVector diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = Rational(-a[i]);
  for (std::size_t i = 1; i < n; ++i) {
    if (diag[i - 1] == 0)
      throw MathError(MathError::Code::singular_matrix, "tridiagonal pivot vanished");
    const Rational m = Rational(1) / diag[i - 1];
    diag[i] -= m;
    rhs[i] -= m * rhs[i - 1];
  }
  if (diag[n - 1] == 0)
    throw MathError(MathError::Code::singular_matrix, "tridiagonal pivot vanished");
  RatVector x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = (rhs[i] - x[i + 1]) / diag[i];
  return x;
}

}  // namespace

std::pair<Rational, Rational> leg_oracle(const HJExpansion& e) {
  const std::size_t n = e.terms.size();
  RatVector w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = Rational(e.terms[i] - 2);
  const RatVector x = tridiag_solve(e.terms, w);
  Rational waw(0);
  for (std::size_t i = 0; i < n; ++i) waw += w[i] * x[i];
  return {waw, x[0]};
}

Rational schur_decompose(const Integer& e0, const std::vector<SchurLeg>& legs,
                         const Rational& z0) {
  Rational delta(e0);
  Rational quad(0);
  Rational cross = z0;
  for (const SchurLeg& leg : legs) {
    const std::size_t n = leg.expansion.terms.size();
    if (leg.z.size() != n)
      throw MathError(MathError::Code::dimension_mismatch,
                      "leg vector length does not match its chain");
    const CoprimePair pq = hj_eval(leg.expansion);
    delta += Rational(pq.q, pq.p);  // -(A^{-1})_{11} = q/p
    const RatVector x = tridiag_solve(leg.expansion.terms, leg.z);
    Rational zaz(0);
    for (std::size_t i = 0; i < n; ++i) zaz += leg.z[i] * x[i];
    quad += zaz;
    cross -= x[0];  // u^T A^{-1} z = x_1
  }
  if (delta == 0)
    throw MathError(MathError::Code::zero_euler_number,
                    "Schur complement vanishes (euler number 0)");
  return quad + cross * cross / delta;
}

bool verify_ssw_embedding(const PlumbingGraph& g, const std::vector<IntVector>& phi,
                          std::vector<std::string>* failures) {
  const int n = g.size();
  auto fail = [&](const std::string& msg) {
    if (failures) failures->push_back(msg);
  };
  if (static_cast<int>(phi.size()) != n) {
    fail("embedding has " + std::to_string(phi.size()) + " rows, expected " +
         std::to_string(n));
    return false;
  }
  for (int v = 0; v < n; ++v)
    if (static_cast<int>(phi[v].size()) != n) {
      fail("row for " + g.id(v) + " has " + std::to_string(phi[v].size()) +
           " entries, expected " + std::to_string(n));
      return false;
    }
  // The ambient form is diag(-1), so Q(x, y) = -sum x_i y_i and
  // Q(x, K) = -sum x_i for K the sum of basis vectors.
  auto pairing = [&](const IntVector& x, const IntVector& y) -> Integer {
    Integer s(0);
    for (int i = 0; i < n; ++i) s += x[i] * y[i];
    return -s;
  };
  bool ok = true;
  for (int v = 0; v < n; ++v) {
    if (pairing(phi[v], phi[v]) != g.weight(v)) {
      ok = false;
      fail("self-pairing of " + g.id(v) + " is " + pairing(phi[v], phi[v]).str() +
           ", expected " + g.weight(v).str());
    }
    Integer coord_sum(0);
    for (int i = 0; i < n; ++i) coord_sum += phi[v][i];
    if (-coord_sum + pairing(phi[v], phi[v]) != -2) {
      ok = false;
      fail("adjunction fails at " + g.id(v));
    }
  }
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      Integer expected(0);
      for (int nb : g.neighbors(v))
        if (nb == w) expected = 1;
      if (pairing(phi[v], phi[w]) != expected) {
        ok = false;
        fail("pairing of " + g.id(v) + ", " + g.id(w) + " is " +
             pairing(phi[v], phi[w]).str() + ", expected " + expected.str());
      }
    }
  return ok;
}

}  // namespace plumbing

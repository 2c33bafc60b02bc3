#include "plumbing/dinvariant.hpp"

#include <algorithm>

#include "plumbing/errors.hpp"
#include "plumbing/lattice.hpp"
#include "plumbing/recursion.hpp"

namespace plumbing {

namespace {

IntVector apply_q(const IntMatrix& q, const IntVector& c) {
  const std::size_t n = q.rows();
  IntVector out(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += q(i, j) * c[j];
  return out;
}

}  // namespace

Rational k_squared_of(const PlumbingGraph& g, const IntVector& c) {
  if (static_cast<int>(c.size()) != g.size())
    throw MathError(MathError::Code::dimension_mismatch, "spin-c offset has wrong length");
  const IntMatrix q = intersection_matrix(g);
  const IntVector kcan = canonical_vector(g);
  const IntVector qc = apply_q(q, c);
  IntVector k(kcan);
  for (std::size_t i = 0; i < k.size(); ++i) k[i] += 2 * qc[i];
  const Rational primary = quad_form_inv(q, k);
  // Consistency: K^2 + 4 c.K + 4 c^T Q c must agree.
  Integer lin(0), cqc(0);
  for (std::size_t i = 0; i < k.size(); ++i) {
    lin += c[i] * kcan[i];
    cqc += c[i] * qc[i];
  }
  const Rational expanded = quad_form_inv(q, kcan) + 4 * Rational(lin) + 4 * Rational(cqc);
  if (primary != expanded)
    throw Error(Error::Kind::internal, "k^2 route disagreement (solve vs expansion)");
  return primary;
}

namespace {

struct Ellipsoid {
  // G = -4Q = L D L^T with L unit lower triangular, d > 0.
  std::size_t n;
  RatMatrix l;
  RatVector d;
  RatVector center;  // c* = -Q^{-1} K / 2
};

Ellipsoid factor(const PlumbingGraph& g) {
  const IntMatrix q = intersection_matrix(g);
  const std::size_t n = q.rows();
  Ellipsoid e;
  e.n = n;
  e.l = RatMatrix::identity(n);
  e.d.assign(n, Rational(0));
  RatMatrix gm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gm(i, j) = Rational(-4 * q(i, j));
  for (std::size_t j = 0; j < n; ++j) {
    Rational dj = gm(j, j);
    for (std::size_t k = 0; k < j; ++k) dj -= e.l(j, k) * e.l(j, k) * e.d[k];
    if (dj <= 0)
      throw Error(Error::Kind::internal, "LDL^T pivot not positive on -4Q");
    e.d[j] = dj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational lij = gm(i, j);
      for (std::size_t k = 0; k < j; ++k) lij -= e.l(i, k) * e.l(j, k) * e.d[k];
      e.l(i, j) = lij / dj;
    }
  }
  RatVector half_k = to_rational(canonical_vector(g));
  for (auto& x : half_k) x /= -2;
  e.center = solve(q, half_k);
  return e;
}

// Integer interval [lo, hi] of x with (x - center)^2 <= r2 (exact).
bool integer_interval(const Rational& center, const Rational& r2, Integer& lo, Integer& hi) {
  if (r2 < 0) return false;
  const Integer a = numer(center), b = denom(center);  // b > 0
  // (x*b - a)^2 <= r2 * b^2; both sides exact, left side an integer.
  const Rational bound = r2 * b * b;
  const Integer m = isqrt(floor_int(bound));
  lo = ceil_int(Rational(a - m, b));
  hi = floor_int(Rational(a + m, b));
  return lo <= hi;
}

struct SearchState {
  const Ellipsoid* e;
  Rational budget;          // current min of g(c); only c with g <= budget matter
  IntVector best;           // lexicographically smallest argmin of g
  std::uint64_t explored = 0;
  std::uint64_t steps = 0;
  std::uint64_t step_limit = 0;
  IntVector c;              // work vector
};

bool lex_less(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

// Depth-first over coordinates n-1 .. 0; u_i = (c_i - c*_i) + sum_{j>i} L_ji (c_j - c*_j).
void descend(SearchState& st, std::size_t level, const Rational& used_above) {
  const Ellipsoid& e = *st.e;
  const std::size_t i = level - 1;
  Rational mu(0);
  for (std::size_t j = i + 1; j < e.n; ++j)
    mu += e.l(j, i) * (Rational(st.c[j]) - e.center[j]);
  const Rational remaining = st.budget - used_above;
  // d_i (c_i - c*_i + mu)^2 <= remaining
  const Rational r2 = remaining / e.d[i];
  Integer lo, hi;
  if (!integer_interval(e.center[i] - mu, r2, lo, hi)) return;
  for (Integer x = lo; x <= hi; ++x) {
    if (++st.steps > st.step_limit)
      throw CapError("lattice enumeration exceeded " + std::to_string(st.step_limit) +
                     " steps; the maximum is likely tied across very many points "
                     "(blow down the graph first)");
    st.c[i] = x;
    const Rational u = Rational(x) - e.center[i] + mu;
    const Rational used = used_above + e.d[i] * u * u;
    if (used > st.budget) continue;  // budget may have shrunk since the interval was set
    if (i == 0) {
      ++st.explored;
      if (used < st.budget) {
        st.budget = used;
        st.best = st.c;
      } else if (used == st.budget && lex_less(st.c, st.best)) {
        st.best = st.c;
      }
    } else {
      descend(st, i, used);
    }
  }
}

}  // namespace

LatticeMax max_k_squared(const PlumbingGraph& g, std::uint64_t step_limit) {
  if (!is_negative_definite(g))
    throw MathError(MathError::Code::not_negative_definite,
                    "max_k_squared requires a negative-definite graph");
  const std::size_t n = g.size();
  Ellipsoid e = factor(g);

  // g(c) = (c - c*)^T (-4Q) (c - c*) = -k^2(c) >= 0; minimize it.
  auto g_of = [&](const IntVector& c) {
    Rational total(0);
    for (std::size_t i = 0; i < n; ++i) {
      Rational u = Rational(c[i]) - e.center[i];
      for (std::size_t j = i + 1; j < n; ++j)
        u += e.l(j, i) * (Rational(c[j]) - e.center[j]);
      total += e.d[i] * u * u;
    }
    return total;
  };

  SearchState st;
  st.e = &e;
  st.step_limit = step_limit;
  st.c.assign(n, Integer(0));

  const IntVector zero(n, Integer(0));
  IntVector rounded(n);
  for (std::size_t i = 0; i < n; ++i) rounded[i] = round_int(e.center[i]);
  st.budget = g_of(zero);
  st.best = zero;
  const Rational g_rounded = g_of(rounded);
  if (g_rounded < st.budget || (g_rounded == st.budget && lex_less(rounded, st.best))) {
    st.budget = g_rounded;
    st.best = rounded;
  }

  descend(st, n, Rational(0));

  LatticeMax out;
  out.max_k_squared = -st.budget;
  out.argmax = st.best;
  out.explored = st.explored;
  out.steps = st.steps;
  return out;
}

Rational d_canonical(const PlumbingGraph& g) {
  return (max_k_squared(g).max_k_squared + g.size()) / 4;
}

Rational d_lower_bound(const PlumbingGraph& g) {
  return (theta_tree(g) + 2) / 4;
}

Rational d_gap(const PlumbingGraph& g) {
  return d_canonical(g) - d_lower_bound(g);
}

}  // namespace plumbing

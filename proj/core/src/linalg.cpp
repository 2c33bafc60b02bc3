#include "plumbing/matrix.hpp"

#include <utility>

#include "plumbing/errors.hpp"

namespace plumbing {

Integer bareiss_determinant(IntMatrix m) {
  if (m.rows() != m.cols())
    throw MathError(MathError::Code::dimension_mismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Fraction-free update: the division by the previous pivot is exact.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

bool is_positive_definite_sym(IntMatrix m) {
  if (m.rows() != m.cols())
    throw MathError(MathError::Code::dimension_mismatch, "definiteness of non-square matrix");
  const std::size_t n = m.rows();
  Integer prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    // Without row swaps the pivot equals the (k+1)-st leading principal
    // minor; Sylvester's criterion wants them all positive.
    if (m(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return true;
}

namespace {

// Gauss-Jordan elimination of [a | rhs] with first-nonzero pivoting.
// Leaves rhs holding a^{-1} * rhs.
void eliminate(RatMatrix& a, RatMatrix& rhs) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n)
      throw MathError(MathError::Code::singular_matrix, "singular matrix in exact solve");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(k, j), rhs(pivot, j));
    }
    const Rational inv = Rational(1) / a(k, k);
    for (std::size_t j = k; j < n; ++j) a(k, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(k, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= f * rhs(k, j);
    }
  }
}

}  // namespace

RatVector solve_linear(RatMatrix a, RatVector b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw MathError(MathError::Code::dimension_mismatch, "solve dimension mismatch");
  RatMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  eliminate(a, rhs);
  RatVector x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
  return x;
}

RatMatrix invert(RatMatrix a) {
  if (a.rows() != a.cols())
    throw MathError(MathError::Code::dimension_mismatch, "inverse of non-square matrix");
  RatMatrix rhs = RatMatrix::identity(a.rows());
  eliminate(a, rhs);
  return rhs;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size())
    throw MathError(MathError::Code::dimension_mismatch, "dot dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  if (m.cols() != v.size())
    throw MathError(MathError::Code::dimension_mismatch, "mat_vec dimension mismatch");
  RatVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace plumbing

#ifndef PLUMBING_MATRIX_HPP
#define PLUMBING_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "plumbing/rational.hpp"

namespace plumbing {

/// Minimal dense row-major matrix.  Sized for desk-scale exact linear
/// algebra; no expression templates, no views.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Exact determinant by fraction-free (Bareiss) elimination with row swaps.
Integer bareiss_determinant(IntMatrix m);

/// True iff the symmetric matrix is positive definite, decided by Sylvester's
/// criterion: fraction-free elimination without row swaps produces the leading
/// principal minors as pivots; all must be positive.
bool is_positive_definite_sym(IntMatrix m);

/// Solves a * x = b exactly; throws MathError(singular_matrix) if singular.
/// Pivoting: first nonzero entry in the column (deterministic).
RatVector solve_linear(RatMatrix a, RatVector b);

/// Exact inverse via elimination on [a | I]; throws if singular.
RatMatrix invert(RatMatrix a);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

Rational dot(const RatVector& a, const RatVector& b);
RatVector mat_vec(const RatMatrix& m, const RatVector& v);

}  // namespace plumbing

#endif

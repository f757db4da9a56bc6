#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdlib>
#include <optional>
#include <utility>

namespace ghg {

/// Result of a Smith normal form computation: U * A * V == D.
///
/// U and V are unimodular. D has the shape of A, is zero off the diagonal, and
/// its diagonal d_0 | d_1 | ... is nonnegative with all zeros trailing.
/// V_inverse is carried along because cokernel coordinates need it.
template <typename Scalar>
struct SmithForm {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix U;
  Matrix D;
  Matrix V;
  Matrix V_inverse;

  Eigen::Index rank() const {
    Eigen::Index r = 0;
    const Eigen::Index n = std::min(D.rows(), D.cols());
    while (r < n && D(r, r) != Scalar(0)) ++r;
    return r;
  }
};

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& x) {
  using std::abs;
  return Scalar(abs(x));
}

template <typename Matrix>
Matrix identity_like(Eigen::Index n) {
  using Scalar = typename Matrix::Scalar;
  Matrix m = Matrix::Constant(n, n, Scalar(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

// row(target) += factor * row(source), applied to A and the left transform.
template <typename Matrix, typename Scalar>
void add_row_multiple(Matrix& A, Matrix& U, Eigen::Index target,
                      Eigen::Index source, const Scalar& factor) {
  for (Eigen::Index j = 0; j < A.cols(); ++j) A(target, j) += factor * A(source, j);
  for (Eigen::Index j = 0; j < U.cols(); ++j) U(target, j) += factor * U(source, j);
}

// col(target) += factor * col(source) on A and V; V^{-1} receives the inverse
// row operation row(source) -= factor * row(target).
template <typename Matrix, typename Scalar>
void add_col_multiple(Matrix& A, Matrix& V, Matrix& V_inv, Eigen::Index target,
                      Eigen::Index source, const Scalar& factor) {
  for (Eigen::Index i = 0; i < A.rows(); ++i) A(i, target) += factor * A(i, source);
  for (Eigen::Index i = 0; i < V.rows(); ++i) V(i, target) += factor * V(i, source);
  for (Eigen::Index j = 0; j < V_inv.cols(); ++j)
    V_inv(source, j) -= factor * V_inv(target, j);
}

// Smallest nonzero |A(i, j)| for i, j >= t; ties go to the lowest (row, col)
// in row-major order.
template <typename Matrix>
std::optional<std::pair<Eigen::Index, Eigen::Index>> find_pivot(const Matrix& A,
                                                                Eigen::Index t) {
  using Scalar = typename Matrix::Scalar;
  std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
  Scalar best_value(0);
  for (Eigen::Index i = t; i < A.rows(); ++i) {
    for (Eigen::Index j = t; j < A.cols(); ++j) {
      if (A(i, j) == Scalar(0)) continue;
      Scalar value = magnitude(A(i, j));
      if (!best || value < best_value) {
        best = std::make_pair(i, j);
        best_value = value;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Smith normal form of an integer matrix with exact arithmetic.
///
/// Works for any Eigen scalar with exact truncating division and remainder
/// (mpz_class, fixed-width integers when the caller can bound entry growth).
/// Pivoting is deterministic so U and V are reproducible.
template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Matrix = typename SmithForm<Scalar>::Matrix;

  SmithForm<Scalar> out;
  Matrix A = input;
  const Eigen::Index rows = A.rows();
  const Eigen::Index cols = A.cols();
  Matrix U = detail::identity_like<Matrix>(rows);
  Matrix V = detail::identity_like<Matrix>(cols);
  Matrix V_inv = detail::identity_like<Matrix>(cols);

  const Eigen::Index diagonal = std::min(rows, cols);
  for (Eigen::Index t = 0; t < diagonal; ++t) {
    for (;;) {
      auto pivot = detail::find_pivot(A, t);
      if (!pivot) break;
      auto [pr, pc] = *pivot;
      if (pr != t) {
        A.row(pr).swap(A.row(t));
        U.row(pr).swap(U.row(t));
      }
      if (pc != t) {
        A.col(pc).swap(A.col(t));
        V.col(pc).swap(V.col(t));
        V_inv.row(pc).swap(V_inv.row(t));
      }

      bool residue = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (A(i, t) == Scalar(0)) continue;
        Scalar q = A(i, t) / A(t, t);
        detail::add_row_multiple(A, U, i, t, Scalar(-q));
        if (A(i, t) != Scalar(0)) residue = true;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (A(t, j) == Scalar(0)) continue;
        Scalar q = A(t, j) / A(t, t);
        detail::add_col_multiple(A, V, V_inv, j, t, Scalar(-q));
        if (A(t, j) != Scalar(0)) residue = true;
      }
      if (residue) continue;

      // Pivot row and column are clear; enforce divisibility on the rest.
      bool divides_all = true;
      for (Eigen::Index i = t + 1; i < rows && divides_all; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (A(i, j) % A(t, t) != Scalar(0)) {
            detail::add_row_multiple(A, U, t, i, Scalar(1));
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (A(t, t) < Scalar(0)) {
      A.row(t) = (-A.row(t)).eval();
      U.row(t) = (-U.row(t)).eval();
    }
  }

  out.U = std::move(U);
  out.D = std::move(A);
  out.V = std::move(V);
  out.V_inverse = std::move(V_inv);
  return out;
}

}  // namespace ghg

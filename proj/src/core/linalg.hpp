// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace statkit {

// Dense row-major matrix of doubles. Small and boring on purpose; the
// toolkit only ever sees matrices with at most a few hundred rows.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<double> row(std::size_t i) const;
  std::vector<double> column(std::size_t j) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

// log|det A| and the sign of det A via partially pivoted LU.
// sign == 0 signals a numerically singular matrix.
struct LogDet {
  double log_abs = 0.0;
  int sign = 1;
};
LogDet log_abs_determinant(Matrix a, double singular_tol = 1e-12);

double determinant(const Matrix& a);

// Inverse via LU with partial pivoting. Throws Error(Numeric) when the
// matrix is singular to working precision.
Matrix inverse(Matrix a);

// Least squares via Householder QR. x must have rows() >= cols().
// Throws Error(Numeric) when x is rank deficient. r is the p x p upper
// triangular factor with non-negative diagonal not guaranteed.
struct LeastSquares {
  std::vector<double> coefficients;
  Matrix r;
};
LeastSquares qr_least_squares(const Matrix& x, const std::vector<double>& y);

// Inverse of an upper triangular matrix by back substitution.
Matrix upper_triangular_inverse(const Matrix& r);

// Eigenvalues and eigenvectors of a symmetric matrix via cyclic Jacobi
// rotations. values are sorted descending; vectors holds the matching
// unit eigenvectors as columns. Each eigenvector is oriented so that its
// largest-magnitude component is positive (first such index on ties),
// which keeps repeated runs bit-identical.
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;
};
EigenDecomposition symmetric_eigen(Matrix a);

}  // namespace statkit

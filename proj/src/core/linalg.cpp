// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#include "core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/errors.hpp"

namespace statkit {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> Matrix::row(std::size_t i) const {
  return std::vector<double>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorCode::InvalidArgument, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

namespace {

// In-place LU with partial pivoting. Returns the permutation sign, or 0
// when a pivot falls below tol relative to the largest column entry seen.
int lu_factor(Matrix& a, std::vector<std::size_t>& perm, double tol) {
  const std::size_t n = a.rows();
  perm.resize(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  int sign = 1;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a(i, j)));
  if (scale == 0.0) return 0;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::fabs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::fabs(a(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best <= tol * scale) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      std::swap(perm[k], perm[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      const double lik = a(i, k);
      if (lik == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= lik * a(k, j);
    }
  }
  return sign;
}

}  // namespace

LogDet log_abs_determinant(Matrix a, double singular_tol) {
  if (a.rows() != a.cols())
    fail(ErrorCode::InvalidArgument, "determinant requires a square matrix");
  std::vector<std::size_t> perm;
  int sign = lu_factor(a, perm, singular_tol);
  LogDet out;
  if (sign == 0) {
    out.sign = 0;
    out.log_abs = -std::numeric_limits<double>::infinity();
    return out;
  }
  double log_abs = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double d = a(i, i);
    if (d < 0.0) sign = -sign;
    log_abs += std::log(std::fabs(d));
  }
  out.sign = sign;
  out.log_abs = log_abs;
  return out;
}

double determinant(const Matrix& a) {
  LogDet ld = log_abs_determinant(a);
  if (ld.sign == 0) return 0.0;
  return ld.sign * std::exp(ld.log_abs);
}

Matrix inverse(Matrix a) {
  if (a.rows() != a.cols())
    fail(ErrorCode::InvalidArgument, "inverse requires a square matrix");
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm;
  if (lu_factor(a, perm, 1e-13) == 0)
    fail(ErrorCode::Numeric, "matrix is singular to working precision");

  Matrix inv(n, n);
  std::vector<double> col(n);
  for (std::size_t c = 0; c < n; ++c) {
    // Solve A x = e_c using the factored form: forward then back.
    for (std::size_t i = 0; i < n; ++i) col[i] = (perm[i] == c) ? 1.0 : 0.0;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) col[i] -= a(i, j) * col[j];
    for (std::size_t ii = n; ii-- > 0;) {
      for (std::size_t j = ii + 1; j < n; ++j) col[ii] -= a(ii, j) * col[j];
      col[ii] /= a(ii, ii);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, c) = col[i];
  }
  return inv;
}

LeastSquares qr_least_squares(const Matrix& x, const std::vector<double>& y) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (y.size() != n)
    fail(ErrorCode::InvalidArgument, "design matrix and response length differ");
  if (n < p)
    fail(ErrorCode::Numeric, "least squares needs at least as many rows as columns");

  Matrix a = x;
  std::vector<double> b = y;

  // Householder reduction of a to upper triangular form, applied to b.
  for (std::size_t k = 0; k < p; ++k) {
    double norm = 0.0;
    for (std::size_t i = k; i < n; ++i) norm = std::hypot(norm, a(i, k));
    if (norm == 0.0) continue;  // caught by the rank check below
    if (a(k, k) > 0.0) norm = -norm;
    for (std::size_t i = k; i < n; ++i) a(i, k) /= norm;
    a(k, k) -= 1.0;
    for (std::size_t j = k + 1; j < p; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < n; ++i) s += a(i, k) * a(i, j);
      s /= a(k, k);
      for (std::size_t i = k; i < n; ++i) a(i, j) += s * a(i, k);
    }
    double s = 0.0;
    for (std::size_t i = k; i < n; ++i) s += a(i, k) * b[i];
    s /= a(k, k);
    for (std::size_t i = k; i < n; ++i) b[i] += s * a(i, k);
    a(k, k) = norm;  // stash the diagonal of R over the reflector pivot
  }

  double max_diag = 0.0;
  for (std::size_t k = 0; k < p; ++k) max_diag = std::max(max_diag, std::fabs(a(k, k)));
  for (std::size_t k = 0; k < p; ++k) {
    if (std::fabs(a(k, k)) <= 1e-10 * std::max(max_diag, 1e-300))
      fail(ErrorCode::Numeric, "design matrix is rank deficient");
  }

  LeastSquares out;
  out.coefficients.assign(p, 0.0);
  for (std::size_t kk = p; kk-- > 0;) {
    double s = b[kk];
    for (std::size_t j = kk + 1; j < p; ++j) s -= a(kk, j) * out.coefficients[j];
    out.coefficients[kk] = s / a(kk, kk);
  }
  out.r = Matrix(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i; j < p; ++j) out.r(i, j) = a(i, j);
  return out;
}

Matrix upper_triangular_inverse(const Matrix& r) {
  const std::size_t p = r.rows();
  Matrix inv(p, p);
  for (std::size_t c = 0; c < p; ++c) {
    inv(c, c) = 1.0 / r(c, c);
    for (std::size_t ii = c; ii-- > 0;) {
      double s = 0.0;
      for (std::size_t j = ii + 1; j <= c; ++j) s += r(ii, j) * inv(j, c);
      inv(ii, c) = -s / r(ii, ii);
    }
  }
  return inv;
}

EigenDecomposition symmetric_eigen(Matrix a) {
  if (a.rows() != a.cols())
    fail(ErrorCode::InvalidArgument, "eigendecomposition requires a square matrix");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = std::fabs(a(i, j) - a(j, i));
      if (gap > 1e-12 * std::max({1.0, std::fabs(a(i, j)), std::fabs(a(j, i))}))
        fail(ErrorCode::InvalidArgument, "eigendecomposition requires a symmetric matrix");
    }
  }
  Matrix v = Matrix::identity(n);

  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
  frob = std::sqrt(frob);
  const double stop = 1e-12 * std::max(frob, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    if (std::sqrt(off) <= stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = a(p, p);
        const double aqq = a(q, q);
        const double apq = a(p, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = aip - s * (aiq + tau * aip);
          a(p, i) = a(i, p);
          a(i, q) = aiq + s * (aip - tau * aiq);
          a(q, i) = a(i, q);
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = vip - s * (viq + tau * vip);
          v(i, q) = viq + s * (vip - tau * viq);
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i) > a(j, j);
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = a(src, src);
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double mag = std::fabs(v(i, src));
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    const double flip = (v(arg, src) < 0.0) ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = flip * v(i, src);
  }
  return out;
}

}  // namespace statkit

// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include <doctest.h>

#include "core/errors.hpp"
#include "core/linalg.hpp"
#include "core/rng.hpp"
#include "support/oracles.hpp"

using statkit::Matrix;

namespace {

Matrix random_matrix(statkit::Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-2.0, 2.0);
  return m;
}

Matrix random_symmetric(statkit::Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rng.uniform(-1.0, 1.0);
  return m;
}

}  // namespace

TEST_CASE("matrix multiply and transpose agree with direct index sums") {
  statkit::Rng rng(11);
  const Matrix a = random_matrix(rng, 3, 4);
  const Matrix b = random_matrix(rng, 4, 2);
  const Matrix c = statkit::multiply(a, b);
  REQUIRE(c.rows() == 3);
  REQUIRE(c.cols() == 2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      CHECK(c(i, j) == doctest::Approx(s).epsilon(1e-12));
    }
  }
  const Matrix at = statkit::transpose(a);
  REQUIRE(at.rows() == 4);
  REQUIRE(at.cols() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(at(j, i) == a(i, j));
}

TEST_CASE("determinant handles known 2x2 and 3x3 cases") {
  Matrix a(2, 2);
  a(0, 0) = 3.0;
  a(0, 1) = 1.0;
  a(1, 0) = 4.0;
  a(1, 1) = 2.0;
  CHECK(statkit::determinant(a) == doctest::Approx(2.0).epsilon(1e-12));

  Matrix b(3, 3);
  const double vals[9] = {2, -1, 0, -1, 2, -1, 0, -1, 2};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) b(i, j) = vals[3 * i + j];
  CHECK(statkit::determinant(b) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(statkit::determinant(Matrix::identity(5)) == doctest::Approx(1.0));
}

TEST_CASE("log determinant flags singular matrices") {
  Matrix s(2, 2);
  s(0, 0) = 1.0;
  s(0, 1) = 2.0;
  s(1, 0) = 2.0;
  s(1, 1) = 4.0;
  CHECK(statkit::log_abs_determinant(s).sign == 0);

  Matrix ok(2, 2);
  ok(0, 0) = -3.0;
  ok(1, 1) = 2.0;
  const auto ld = statkit::log_abs_determinant(ok);
  CHECK(ld.sign == -1);
  CHECK(ld.log_abs == doctest::Approx(std::log(6.0)).epsilon(1e-12));
}

TEST_CASE("inverse reproduces the identity on seeded random matrices") {
  statkit::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix a = random_matrix(rng, n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += 3.0;  // keep well conditioned
    const Matrix inv = statkit::inverse(a);
    const Matrix prod = statkit::multiply(a, inv);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(prod(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
  }
  Matrix singular(2, 2, 1.0);
  CHECK_THROWS_AS(statkit::inverse(singular), statkit::Error);
}

TEST_CASE("QR least squares matches the normal equations oracle") {
  statkit::Rng rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t p = 1 + trial % 4;
    const std::size_t n = p + 3 + trial % 10;
    Matrix x(n, p + 1);
    oracle::Mat xo(n, std::vector<double>(p + 1));
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x(i, 0) = xo[i][0] = 1.0;
      for (std::size_t j = 1; j <= p; ++j) x(i, j) = xo[i][j] = rng.uniform(-4.0, 4.0);
      y[i] = rng.uniform(-10.0, 10.0);
    }
    const auto fit = statkit::qr_least_squares(x, y);
    const auto expect = oracle::ols_normal_equations(xo, y);
    REQUIRE(fit.coefficients.size() == expect.size());
    for (std::size_t j = 0; j < expect.size(); ++j)
      CHECK(fit.coefficients[j] == doctest::Approx(expect[j]).epsilon(1e-8));
  }
}

TEST_CASE("QR least squares rejects rank-deficient designs") {
  Matrix x(5, 2);
  for (std::size_t i = 0; i < 5; ++i) {
    x(i, 0) = 1.0;
    x(i, 1) = 2.0;  // second column is a multiple of the first
  }
  const std::vector<double> y{1, 2, 3, 4, 5};
  CHECK_THROWS_AS(statkit::qr_least_squares(x, y), statkit::Error);
}

TEST_CASE("upper triangular inverse is exact on a hand case") {
  Matrix r(2, 2);
  r(0, 0) = 2.0;
  r(0, 1) = 1.0;
  r(1, 1) = 4.0;
  const Matrix inv = statkit::upper_triangular_inverse(r);
  CHECK(inv(0, 0) == doctest::Approx(0.5));
  CHECK(inv(0, 1) == doctest::Approx(-0.125));
  CHECK(inv(1, 0) == doctest::Approx(0.0));
  CHECK(inv(1, 1) == doctest::Approx(0.25));
}

TEST_CASE("symmetric eigensolver satisfies A v = lambda v on seeded input") {
  statkit::Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Matrix a = random_symmetric(rng, n);
    const auto eig = statkit::symmetric_eigen(a);
    REQUIRE(eig.values.size() == n);
    // Descending order.
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(eig.values[i] >= eig.values[i + 1]);
    // Trace equals the eigenvalue sum.
    double trace = 0.0, lambda_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      trace += a(i, i);
      lambda_sum += eig.values[i];
    }
    CHECK(lambda_sum == doctest::Approx(trace).epsilon(1e-10));
    // Residual and orthonormality.
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = eig.vectors.column(j);
      double norm2 = 0.0;
      for (double c : v) norm2 += c * c;
      CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-10));
      for (std::size_t i = 0; i < n; ++i) {
        double av = 0.0;
        for (std::size_t k = 0; k < n; ++k) av += a(i, k) * v[k];
        CHECK(std::fabs(av - eig.values[j] * v[i]) <= 1e-9);
      }
      for (std::size_t l = j + 1; l < n; ++l) {
        const auto w = eig.vectors.column(l);
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += v[i] * w[i];
        CHECK(std::fabs(dot) <= 1e-10);
      }
    }
  }
}

TEST_CASE("symmetric eigensolver rejects non-symmetric input") {
  Matrix a(2, 2);
  a(0, 1) = 1.0;
  a(1, 0) = 2.0;
  CHECK_THROWS_AS(statkit::symmetric_eigen(a), statkit::Error);
}

TEST_CASE("eigenvector orientation is deterministic") {
  Matrix a(2, 2);
  a(0, 0) = 2.0;
  a(0, 1) = 1.0;
  a(1, 0) = 1.0;
  a(1, 1) = 2.0;
  const auto first = statkit::symmetric_eigen(a);
  const auto second = statkit::symmetric_eigen(a);
  for (std::size_t j = 0; j < 2; ++j) {
    const auto v = first.vectors.column(j);
    const auto w = second.vectors.column(j);
    for (std::size_t i = 0; i < 2; ++i) CHECK(v[i] == w[i]);
    // Largest-magnitude component positive.
    double best = 0.0;
    for (double c : v)
      if (std::fabs(c) > std::fabs(best)) best = c;
    CHECK(best > 0.0);
  }
}

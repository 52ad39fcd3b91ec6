// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "core/linalg.hpp"

namespace statkit {

// Least-squares fit of y on an intercept plus p predictors.
struct LinearModel {
  std::vector<double> coefficients;   // b0, b1..bp
  std::vector<double> fitted;
  std::vector<double> residuals;
  std::size_t n = 0;
  std::size_t p = 0;
  std::vector<double> xtx_inv_diag;   // diag of (X'X)^-1, intercept first
};

struct AnovaTable {
  double sst = 0.0, ssm = 0.0, sse = 0.0;
  std::size_t dfm = 0, dfe = 0;
  double msm = 0.0, mse = 0.0;
  double f = 0.0;        // +inf on an exact fit
  double p_value = 1.0;
};

struct CoefficientTest {
  std::size_t index = 0;     // 0 = intercept
  double estimate = 0.0;
  double hypothesized = 0.0;
  bool defined = true;       // false when MSE = 0 (exact fit)
  double standard_error = 0.0;
  double t = 0.0;
  double p_value = 1.0;
};

// x is n rows by p columns of predictors (no intercept column; one is
// added internally). Requires n >= p + 2 and a full-rank design.
LinearModel fit_ols(const Matrix& x, const std::vector<double>& y);

AnovaTable anova(const LinearModel& model, const std::vector<double>& y);

// t_i = (b_i - k_i)/se(b_i) against t(n - p - 1), two-tailed. k has
// p + 1 entries (intercept first) or is empty for all-zero. On an
// exact fit every test is returned with defined = false.
std::vector<CoefficientTest> coefficient_tests(const LinearModel& model,
                                               const std::vector<double>& y,
                                               const std::vector<double>& hypothesized = {});

// SSM / SST. Errors when SST = 0 (constant response).
double r_squared(const AnovaTable& table);

double predict(const LinearModel& model, const std::vector<double>& x_new);

}  // namespace statkit

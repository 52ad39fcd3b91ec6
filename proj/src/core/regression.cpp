// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#include "core/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/descriptive.hpp"
#include "core/errors.hpp"
#include "core/inference.hpp"

namespace statkit {

LinearModel fit_ols(const Matrix& x, const std::vector<double>& y) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (y.size() != n)
    fail(ErrorCode::InvalidArgument, "response length differs from predictor rows");
  if (n < p + 2)
    fail(ErrorCode::InvalidArgument,
         "least squares needs n >= p + 2 (one error degree of freedom)");

  Matrix design(n, p + 1);
  for (std::size_t i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    for (std::size_t j = 0; j < p; ++j) design(i, j + 1) = x(i, j);
  }

  const LeastSquares ls = qr_least_squares(design, y);

  LinearModel model;
  model.coefficients = ls.coefficients;
  model.n = n;
  model.p = p;
  model.fitted.resize(n);
  model.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double yhat = ls.coefficients[0];
    for (std::size_t j = 0; j < p; ++j) yhat += ls.coefficients[j + 1] * x(i, j);
    model.fitted[i] = yhat;
    model.residuals[i] = y[i] - yhat;
  }

  // (X'X)^-1 = R^-1 R^-T, so its diagonal is the squared row norms
  // of R^-1.
  const Matrix rinv = upper_triangular_inverse(ls.r);
  model.xtx_inv_diag.assign(p + 1, 0.0);
  for (std::size_t i = 0; i <= p; ++i) {
    double s = 0.0;
    for (std::size_t j = i; j <= p; ++j) s += rinv(i, j) * rinv(i, j);
    model.xtx_inv_diag[i] = s;
  }
  return model;
}

AnovaTable anova(const LinearModel& model, const std::vector<double>& y) {
  if (y.size() != model.n)
    fail(ErrorCode::InvalidArgument, "response length differs from the fitted model");
  if (model.n < model.p + 2)
    fail(ErrorCode::InvalidArgument, "no error degrees of freedom");

  const double ybar = mean(y);
  AnovaTable table;
  for (std::size_t i = 0; i < model.n; ++i) {
    const double dt = y[i] - ybar;
    const double dm = model.fitted[i] - ybar;
    const double de = model.residuals[i];
    table.sst += dt * dt;
    table.ssm += dm * dm;
    table.sse += de * de;
  }
  // Residual noise from an algebraically exact fit is pure rounding;
  // collapse it to zero so downstream code sees the exact-fit branch.
  if (table.sse <= 1e-20 * std::max(table.sst, 1e-300)) table.sse = 0.0;
  table.dfm = model.p;
  table.dfe = model.n - model.p - 1;
  table.msm = table.ssm / static_cast<double>(table.dfm);
  table.mse = table.sse / static_cast<double>(table.dfe);

  if (table.mse > 0.0) {
    table.f = table.msm / table.mse;
    table.p_value = p_value(table.f,
                            Distribution::fisher_f(static_cast<double>(table.dfm),
                                                   static_cast<double>(table.dfe)),
                            Tail::Right);
  } else if (table.msm > 0.0) {
    // Exact fit with signal: the statistic diverges.
    table.f = std::numeric_limits<double>::infinity();
    table.p_value = 0.0;
  } else {
    // Constant response fitted exactly: nothing to explain.
    table.f = 0.0;
    table.p_value = 1.0;
  }
  return table;
}

std::vector<CoefficientTest> coefficient_tests(const LinearModel& model,
                                               const std::vector<double>& y,
                                               const std::vector<double>& hypothesized) {
  const AnovaTable table = anova(model, y);
  if (!hypothesized.empty() && hypothesized.size() != model.p + 1)
    fail(ErrorCode::InvalidArgument,
         "hypothesized coefficient list must have p + 1 entries");

  std::vector<CoefficientTest> tests(model.p + 1);
  const Distribution t_ref = Distribution::student_t(static_cast<double>(table.dfe));
  for (std::size_t i = 0; i <= model.p; ++i) {
    CoefficientTest& test = tests[i];
    test.index = i;
    test.estimate = model.coefficients[i];
    test.hypothesized = hypothesized.empty() ? 0.0 : hypothesized[i];
    if (table.mse > 0.0) {
      test.standard_error = std::sqrt(table.mse * model.xtx_inv_diag[i]);
      test.t = (test.estimate - test.hypothesized) / test.standard_error;
      test.p_value = p_value(test.t, t_ref, Tail::Two);
    } else {
      test.defined = false;  // exact fit: no residual scale to test against
    }
  }
  return tests;
}

double r_squared(const AnovaTable& table) {
  if (!(table.sst > 0.0))
    fail(ErrorCode::Data, "constant response: the determination coefficient is undefined");
  return table.ssm / table.sst;
}

double predict(const LinearModel& model, const std::vector<double>& x_new) {
  if (x_new.size() != model.p)
    fail(ErrorCode::InvalidArgument, "prediction point has the wrong dimension");
  double yhat = model.coefficients[0];
  for (std::size_t j = 0; j < model.p; ++j)
    yhat += model.coefficients[j + 1] * x_new[j];
  return yhat;
}

}  // namespace statkit

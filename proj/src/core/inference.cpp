// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#include "core/inference.hpp"

#include <algorithm>
#include <cmath>

#include "core/descriptive.hpp"
#include "core/errors.hpp"

namespace statkit {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    fail(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");
}

void check_level(double level) {
  if (!(level > 0.0 && level < 1.0))
    fail(ErrorCode::InvalidArgument, "confidence level must lie in (0, 1)");
}

TestResult finish(TestResult result) {
  result.reject = result.p_value < result.alpha;
  return result;
}

}  // namespace

const char* tail_name(Tail t) {
  switch (t) {
    case Tail::Left: return "left-tailed";
    case Tail::Right: return "right-tailed";
    case Tail::Two: return "two-tailed";
  }
  return "?";
}

double p_value(double s, const Distribution& reference, Tail tail) {
  if (reference.family == Family::Binomial)
    fail(ErrorCode::InvalidArgument,
         "binomial references use the exact proportion test, not p_value");
  switch (tail) {
    case Tail::Right:
      return 1.0 - cdf(reference, s);
    case Tail::Left:
      return cdf(reference, s);
    case Tail::Two: {
      const bool symmetric = reference.family == Family::Normal ||
                             reference.family == Family::StudentT;
      if (symmetric) {
        const double center = reference.family == Family::Normal ? reference.mu() : 0.0;
        const double hi = center + std::fabs(s - center);
        return std::min(1.0, 2.0 * (1.0 - cdf(reference, hi)));
      }
      const double lower = cdf(reference, s);
      return std::min(1.0, 2.0 * std::min(lower, 1.0 - lower));
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown tail");
}

TestResult z_test_mean(double xbar, std::size_t n, double mu0, double sigma,
                       Tail tail, double alpha,
                       std::optional<std::size_t> population_size) {
  check_alpha(alpha);
  if (n < 1) fail(ErrorCode::InvalidArgument, "z test needs n >= 1");
  if (!(sigma > 0.0)) fail(ErrorCode::InvalidArgument, "z test needs sigma > 0");

  double se = sigma / std::sqrt(static_cast<double>(n));
  if (population_size) {
    const std::size_t N = *population_size;
    if (N < n) fail(ErrorCode::InvalidArgument, "population size smaller than the sample");
    if (N == n)
      fail(ErrorCode::InvalidArgument,
           "census case: finite-population correction drives the standard error to 0");
    se *= std::sqrt(static_cast<double>(N - n) / static_cast<double>(N - 1));
  }

  TestResult result;
  result.name = "z test for a mean";
  result.statistic = (xbar - mu0) / se;
  result.reference = Distribution::normal(0.0, 1.0);
  result.tail = tail;
  result.alpha = alpha;
  result.p_value = p_value(result.statistic, result.reference, tail);
  result.df_label = "-";
  return finish(result);
}

TestResult t_test_mean(const std::vector<double>& sample, double mu0, Tail tail,
                       double alpha) {
  check_alpha(alpha);
  if (sample.size() < 2) fail(ErrorCode::InvalidArgument, "t test needs n >= 2");
  const double s = standard_deviation(sample, VarianceMode::Sample);
  if (!(s > 0.0)) fail(ErrorCode::Data, "t test needs a nonzero sample deviation");
  const double n = static_cast<double>(sample.size());

  TestResult result;
  result.name = "t test for a mean";
  result.statistic = (mean(sample) - mu0) / (s / std::sqrt(n));
  result.reference = Distribution::student_t(n - 1.0);
  result.tail = tail;
  result.alpha = alpha;
  result.p_value = p_value(result.statistic, result.reference, tail);
  result.df_label = "df = " + std::to_string(sample.size() - 1);
  return finish(result);
}

TestResult chi2_test_variance(const std::vector<double>& sample, double sigma0_sq,
                              Tail tail, double alpha) {
  check_alpha(alpha);
  if (sample.size() < 2)
    fail(ErrorCode::InvalidArgument, "variance test needs n >= 2");
  if (!(sigma0_sq > 0.0))
    fail(ErrorCode::InvalidArgument, "hypothesized variance must be positive");
  const double n = static_cast<double>(sample.size());
  const double s2 = variance(sample, VarianceMode::Sample);

  TestResult result;
  result.name = "chi-square test for a variance";
  result.statistic = (n - 1.0) * s2 / sigma0_sq;
  result.reference = Distribution::chi_square(n - 1.0);
  result.tail = tail;
  result.alpha = alpha;
  result.p_value = p_value(result.statistic, result.reference, tail);
  result.df_label = "df = " + std::to_string(sample.size() - 1);
  return finish(result);
}

TestResult f_test_variance_ratio(const std::vector<double>& a,
                                 const std::vector<double>& b, Tail tail,
                                 double alpha) {
  check_alpha(alpha);
  if (a.size() < 2 || b.size() < 2)
    fail(ErrorCode::InvalidArgument, "variance-ratio test needs n >= 2 in both samples");
  const double s2a = variance(a, VarianceMode::Sample);
  const double s2b = variance(b, VarianceMode::Sample);
  if (!(s2b > 0.0))
    fail(ErrorCode::Data, "denominator sample has zero variance");

  TestResult result;
  result.name = "F test for a variance ratio";
  result.statistic = s2a / s2b;
  result.reference = Distribution::fisher_f(static_cast<double>(a.size() - 1),
                                            static_cast<double>(b.size() - 1));
  result.tail = tail;
  result.alpha = alpha;
  result.p_value = p_value(result.statistic, result.reference, tail);
  result.df_label = "df = (" + std::to_string(a.size() - 1) + ", " +
                    std::to_string(b.size() - 1) + ")";
  return finish(result);
}

TestResult proportion_test(std::size_t successes, std::size_t trials, double p0,
                           Tail tail, double alpha) {
  check_alpha(alpha);
  if (trials < 1) fail(ErrorCode::InvalidArgument, "proportion test needs trials >= 1");
  if (successes > trials)
    fail(ErrorCode::InvalidArgument, "successes exceed trials");
  if (!(p0 > 0.0 && p0 < 1.0))
    fail(ErrorCode::InvalidArgument, "hypothesized proportion must lie in (0, 1)");

  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const bool large_sample = trials > 20 && n * p0 > 5.0;
  // The large-sample statistic scales by p-hat(1-p-hat); a boundary
  // p-hat would zero the standard error, so those cases stay exact.
  const bool interior = phat > 0.0 && phat < 1.0;

  TestResult result;
  result.tail = tail;
  result.alpha = alpha;
  if (large_sample && interior) {
    result.name = "proportion test (normal approximation)";
    const double se = std::sqrt(phat * (1.0 - phat) / n);
    result.statistic = (phat - p0) / se;
    result.reference = Distribution::normal(0.0, 1.0);
    result.p_value = p_value(result.statistic, result.reference, tail);
    result.df_label = "-";
    return finish(result);
  }

  result.name = "proportion test (exact binomial)";
  result.statistic = static_cast<double>(successes);
  result.reference = Distribution::binomial(trials, p0);
  const double k = static_cast<double>(successes);
  const double lower = cdf(result.reference, k);          // P(X <= k)
  const double upper = 1.0 - cdf(result.reference, k - 1.0);  // P(X >= k)
  switch (tail) {
    case Tail::Left: result.p_value = lower; break;
    case Tail::Right: result.p_value = upper; break;
    case Tail::Two: result.p_value = std::min(1.0, 2.0 * std::min(lower, upper)); break;
  }
  result.df_label = "exact";
  return finish(result);
}

ConfidenceInterval ci_mean_z(double xbar, std::size_t n, double sigma, double level) {
  check_level(level);
  if (n < 1) fail(ErrorCode::InvalidArgument, "interval needs n >= 1");
  if (!(sigma > 0.0)) fail(ErrorCode::InvalidArgument, "interval needs sigma > 0");
  const double z = quantile(Distribution::normal(0.0, 1.0), 0.5 + level / 2.0);
  const double half = z * sigma / std::sqrt(static_cast<double>(n));
  return {xbar - half, xbar + half, level};
}

ConfidenceInterval ci_mean_t(const std::vector<double>& sample, double level) {
  check_level(level);
  if (sample.size() < 2) fail(ErrorCode::InvalidArgument, "interval needs n >= 2");
  const double n = static_cast<double>(sample.size());
  const double xbar = mean(sample);
  const double s = standard_deviation(sample, VarianceMode::Sample);
  if (s == 0.0) return {xbar, xbar, level};  // degenerate sample: zero width
  const double t = quantile(Distribution::student_t(n - 1.0), 0.5 + level / 2.0);
  const double half = t * s / std::sqrt(n);
  return {xbar - half, xbar + half, level};
}

ConfidenceInterval ci_proportion(std::size_t successes, std::size_t trials,
                                 double level) {
  check_level(level);
  if (trials < 1) fail(ErrorCode::InvalidArgument, "interval needs trials >= 1");
  if (successes > trials)
    fail(ErrorCode::InvalidArgument, "successes exceed trials");
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z = quantile(Distribution::normal(0.0, 1.0), 0.5 + level / 2.0);
  const double half = z * std::sqrt(phat * (1.0 - phat) / n);
  return {std::max(0.0, phat - half), std::min(1.0, phat + half), level};
}

ErrorTypeTable error_type_table(double alpha, std::optional<double> power) {
  check_alpha(alpha);
  ErrorTypeTable table;
  table.alpha = alpha;
  if (power) {
    if (!(*power > 0.0 && *power < 1.0))
      fail(ErrorCode::InvalidArgument, "power must lie in (0, 1)");
    table.power = power;
    table.beta_note = "beta = 1 - power";
  } else {
    table.beta_note = "depends on power";
  }
  return table;
}

}  // namespace statkit

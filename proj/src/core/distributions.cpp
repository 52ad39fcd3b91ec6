// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#include "core/distributions.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/special.hpp"

namespace statkit {

Distribution Distribution::normal(double mu, double sigma) {
  if (!(sigma > 0.0)) fail(ErrorCode::InvalidArgument, "normal distribution needs sigma > 0");
  if (!std::isfinite(mu)) fail(ErrorCode::InvalidArgument, "normal mean must be finite");
  return {Family::Normal, mu, sigma};
}

Distribution Distribution::chi_square(double df) {
  if (!(df > 0.0)) fail(ErrorCode::InvalidArgument, "chi-square needs df > 0");
  return {Family::ChiSquare, df, 0.0};
}

Distribution Distribution::student_t(double df) {
  if (!(df > 0.0)) fail(ErrorCode::InvalidArgument, "t distribution needs df > 0");
  return {Family::StudentT, df, 0.0};
}

Distribution Distribution::fisher_f(double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0))
    fail(ErrorCode::InvalidArgument, "F distribution needs both df > 0");
  return {Family::FisherF, df1, df2};
}

Distribution Distribution::binomial(std::size_t trials, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    fail(ErrorCode::InvalidArgument, "binomial needs p in [0, 1]");
  return {Family::Binomial, static_cast<double>(trials), p};
}

namespace {

std::string fmt(double v) {
  char buf[32];
  if (v == std::floor(v) && std::fabs(v) < 1e15)
    std::snprintf(buf, sizeof buf, "%.0f", v);
  else
    std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double binomial_pmf(std::size_t n, double p, std::size_t k) {
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  const double log_choose =
      ln_gamma(nn + 1.0) - ln_gamma(kk + 1.0) - ln_gamma(nn - kk + 1.0);
  return std::exp(log_choose + kk * std::log(p) + (nn - kk) * std::log1p(-p));
}

// Integrates a density with a possible power singularity at 0 over
// (0, x] using the substitution t = u^s; s is chosen so the
// transformed integrand is bounded at u = 0. `log_density` evaluates
// ln f(t) minus any pole terms; pieces are combined explicitly below.

double chi_square_density_sub(double df, double u, int s) {
  // f(t) = t^{df/2-1} e^{-t/2} / (2^{df/2} Gamma(df/2)), t = u^s.
  const double log_norm = 0.5 * df * std::log(2.0) + ln_gamma(0.5 * df);
  const double power = 0.5 * df * s - 1.0;  // exponent of u after substitution
  const double us = std::pow(u, s);
  return static_cast<double>(s) * std::pow(u, power) * std::exp(-0.5 * us - log_norm);
}

double fisher_f_density_sub(double m, double n, double u, int s) {
  // f(t) = G (m/n)^{m/2} t^{m/2-1} (1+mt/n)^{-(m+n)/2}, t = u^s.
  const double log_g =
      ln_gamma(0.5 * (m + n)) - ln_gamma(0.5 * m) - ln_gamma(0.5 * n);
  const double power = 0.5 * m * s - 1.0;
  const double us = std::pow(u, s);
  const double log_rest = log_g + 0.5 * m * std::log(m / n) -
                          0.5 * (m + n) * std::log1p(m * us / n);
  return static_cast<double>(s) * std::pow(u, power) * std::exp(log_rest);
}

double student_t_density(double df, double x) {
  const double log_norm = ln_gamma(0.5 * (df + 1.0)) - ln_gamma(0.5 * df) -
                          0.5 * std::log(df * M_PI);
  return std::exp(log_norm - 0.5 * (df + 1.0) * std::log1p(x * x / df));
}

// Integral of g over [0, upper], split into geometrically growing
// segments so adaptive quadrature spends its effort near the origin
// and the mode, then coasts through the tail.
double integrate_from_zero(const std::function<double(double)>& g, double upper) {
  constexpr double kSegTol = 1e-13;
  double total = 0.0;
  double lo = 0.0;
  double hi = std::min(1.0, upper);
  while (true) {
    total += adaptive_simpson(g, lo, hi, kSegTol);
    if (hi >= upper) break;
    lo = hi;
    hi = std::min(hi * 2.0, upper);
  }
  return total;
}

int singularity_order(double half_df_times_2) {
  // Smallest integer s >= 2 with s * (df/2) >= 1.
  const double df = half_df_times_2;
  int s = 2;
  if (df < 1.0) s = static_cast<int>(std::ceil(2.0 / df));
  return std::max(s, 2);
}

double continuous_cdf(const Distribution& d, double x);

}  // namespace

std::string distribution_label(const Distribution& d) {
  switch (d.family) {
    case Family::Normal:
      return "N(" + fmt(d.mu()) + ", " + fmt(d.sigma()) + ")";
    case Family::ChiSquare:
      return "chi-square(" + fmt(d.df()) + ")";
    case Family::StudentT:
      return "t(" + fmt(d.df()) + ")";
    case Family::FisherF:
      return "F(" + fmt(d.df1()) + ", " + fmt(d.df2()) + ")";
    case Family::Binomial:
      return "B(" + fmt(d.a) + ", " + fmt(d.prob()) + ")";
  }
  return "?";
}

double pdf(const Distribution& d, double x) {
  switch (d.family) {
    case Family::Normal: {
      const double z = (x - d.mu()) / d.sigma();
      return std::exp(-0.5 * z * z) / (d.sigma() * std::sqrt(2.0 * M_PI));
    }
    case Family::ChiSquare: {
      if (!(x > 0.0)) fail(ErrorCode::InvalidArgument, "chi-square density needs x > 0");
      const double n = d.df();
      return std::exp((0.5 * n - 1.0) * std::log(x) - 0.5 * x -
                      0.5 * n * std::log(2.0) - ln_gamma(0.5 * n));
    }
    case Family::StudentT:
      return student_t_density(d.df(), x);
    case Family::FisherF: {
      if (!(x > 0.0)) fail(ErrorCode::InvalidArgument, "F density needs x > 0");
      const double m = d.df1();
      const double n = d.df2();
      const double log_g =
          ln_gamma(0.5 * (m + n)) - ln_gamma(0.5 * m) - ln_gamma(0.5 * n);
      return std::exp(log_g + 0.5 * m * std::log(m / n) +
                      (0.5 * m - 1.0) * std::log(x) -
                      0.5 * (m + n) * std::log1p(m * x / n));
    }
    case Family::Binomial: {
      if (x != std::floor(x) || x < 0.0 || x > d.a)
        fail(ErrorCode::InvalidArgument, "binomial mass needs an integer x in [0, trials]");
      return binomial_pmf(d.trials(), d.prob(), static_cast<std::size_t>(x));
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown distribution family");
}

namespace {

double continuous_cdf(const Distribution& d, double x) {
  switch (d.family) {
    case Family::Normal:
      return standard_normal_cdf((x - d.mu()) / d.sigma());
    case Family::ChiSquare: {
      if (x <= 0.0) return 0.0;
      const double n = d.df();
      const int s = singularity_order(n);
      const double upper = std::pow(x, 1.0 / s);
      return integrate_from_zero(
          [n, s](double u) { return chi_square_density_sub(n, u, s); }, upper);
    }
    case Family::StudentT: {
      const double n = d.df();
      const double ax = std::fabs(x);
      const double half = integrate_from_zero(
          [n](double u) { return student_t_density(n, u); }, ax);
      return x >= 0.0 ? 0.5 + half : 0.5 - half;
    }
    case Family::FisherF: {
      if (x <= 0.0) return 0.0;
      const double m = d.df1();
      const double n = d.df2();
      const int s = singularity_order(m);
      const double upper = std::pow(x, 1.0 / s);
      return integrate_from_zero(
          [m, n, s](double u) { return fisher_f_density_sub(m, n, u, s); }, upper);
    }
    default:
      fail(ErrorCode::InvalidArgument, "not a continuous family");
  }
}

}  // namespace

double cdf(const Distribution& d, double x) {
  if (d.family == Family::Binomial) {
    if (x < 0.0) return 0.0;
    const std::size_t n = d.trials();
    const std::size_t k = x >= static_cast<double>(n)
                              ? n
                              : static_cast<std::size_t>(std::floor(x));
    double sum = 0.0;
    for (std::size_t i = 0; i <= k; ++i) sum += binomial_pmf(n, d.prob(), i);
    return std::min(sum, 1.0);
  }
  const double value = continuous_cdf(d, x);
  return std::min(std::max(value, 0.0), 1.0);
}

double quantile(const Distribution& d, double q) {
  if (!(q > 0.0 && q < 1.0))
    fail(ErrorCode::InvalidArgument, "quantile level must lie in (0, 1)");

  if (d.family == Family::Binomial) {
    const std::size_t n = d.trials();
    double sum = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      sum += binomial_pmf(n, d.prob(), k);
      if (sum >= q) return static_cast<double>(k);
    }
    return static_cast<double>(n);  // guards accumulated rounding
  }

  // Bracket the root, then bisect.
  double lo, hi;
  switch (d.family) {
    case Family::Normal: {
      lo = d.mu() - d.sigma();
      hi = d.mu() + d.sigma();
      double step = d.sigma();
      while (cdf(d, lo) >= q) { lo -= step; step *= 2.0; }
      step = d.sigma();
      while (cdf(d, hi) < q) { hi += step; step *= 2.0; }
      break;
    }
    case Family::StudentT: {
      lo = -1.0;
      hi = 1.0;
      while (cdf(d, lo) >= q) {
        lo *= 2.0;
        if (lo < -1e300) fail(ErrorCode::Numeric, "quantile exceeds floating-point range");
      }
      while (cdf(d, hi) < q) {
        hi *= 2.0;
        if (hi > 1e300) fail(ErrorCode::Numeric, "quantile exceeds floating-point range");
      }
      break;
    }
    case Family::ChiSquare:
    case Family::FisherF: {
      lo = 0.0;
      hi = 1.0;
      while (cdf(d, hi) < q) {
        hi *= 2.0;
        if (hi > 1e300) fail(ErrorCode::Numeric, "quantile exceeds floating-point range");
      }
      break;
    }
    default:
      fail(ErrorCode::InvalidArgument, "unknown distribution family");
  }

  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (cdf(d, mid) >= q)
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= 1e-13 * std::max({1.0, std::fabs(lo), std::fabs(hi)})) break;
  }
  return 0.5 * (lo + hi);
}

Moments moments(const Distribution& d) {
  switch (d.family) {
    case Family::Normal:
      return {d.mu(), d.sigma() * d.sigma()};
    case Family::ChiSquare:
      return {d.df(), 2.0 * d.df()};
    case Family::StudentT: {
      const double n = d.df();
      if (!(n > 2.0))
        fail(ErrorCode::InvalidArgument, "t moments need df > 2 (variance undefined)");
      return {0.0, n / (n - 2.0)};
    }
    case Family::FisherF: {
      const double m = d.df1();
      const double n = d.df2();
      if (!(n > 4.0))
        fail(ErrorCode::InvalidArgument, "F moments need df2 > 4 (variance undefined)");
      const double mean = n / (n - 2.0);
      const double variance =
          2.0 * n * n * (m + n - 2.0) / (m * (n - 2.0) * (n - 2.0) * (n - 4.0));
      return {mean, variance};
    }
    case Family::Binomial: {
      const double np = d.a * d.prob();
      return {np, np * (1.0 - d.prob())};
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown distribution family");
}

std::array<double, 3> empirical_rule(const Distribution& d) {
  if (d.family != Family::Normal)
    fail(ErrorCode::InvalidArgument, "the empirical rule applies to normal distributions");
  std::array<double, 3> out{};
  for (int k = 1; k <= 3; ++k) {
    out[static_cast<std::size_t>(k - 1)] =
        cdf(d, d.mu() + k * d.sigma()) - cdf(d, d.mu() - k * d.sigma());
  }
  return out;
}

bool binomial_normal_approx_ok(std::size_t trials, double p, double np_threshold) {
  return trials > 20 && static_cast<double>(trials) * p > np_threshold;
}

namespace {

CltReport summarize_means(std::vector<double>&& means, std::string population,
                          std::size_t n, std::size_t replications) {
  CltReport report;
  report.population = std::move(population);
  report.sample_size = n;
  report.replications = replications;

  const double r = static_cast<double>(means.size());
  double sum = 0.0;
  for (double m : means) sum += m;
  report.mean_of_means = sum / r;

  double m2 = 0.0, m3 = 0.0;
  for (double m : means) {
    const double d = m - report.mean_of_means;
    m2 += d * d;
    m3 += d * d * d;
  }
  report.sd_of_means = means.size() > 1 ? std::sqrt(m2 / (r - 1.0)) : 0.0;
  const double v = m2 / r;
  report.skewness = v > 0.0 ? (m3 / r) / std::pow(v, 1.5) : 0.0;
  return report;
}

}  // namespace

CltReport clt_simulate(const std::vector<double>& population, std::size_t n,
                       std::size_t replications, std::uint64_t seed) {
  if (population.empty()) fail(ErrorCode::InvalidArgument, "empty population");
  if (n < 1 || replications < 1)
    fail(ErrorCode::InvalidArgument, "sample size and replication count must be >= 1");
  Rng rng(seed);
  std::vector<double> means(replications);
  for (std::size_t r = 0; r < replications; ++r) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      sum += population[static_cast<std::size_t>(rng.below(population.size()))];
    means[r] = sum / static_cast<double>(n);
  }
  return summarize_means(std::move(means),
                         "empirical(N=" + std::to_string(population.size()) + ")", n,
                         replications);
}

CltReport clt_simulate(const Distribution& population, std::size_t n,
                       std::size_t replications, std::uint64_t seed) {
  if (n < 1 || replications < 1)
    fail(ErrorCode::InvalidArgument, "sample size and replication count must be >= 1");
  if (population.family != Family::Normal && population.family != Family::Binomial)
    fail(ErrorCode::InvalidArgument,
         "resampling is only provided for normal and binomial populations; "
         "pass an empirical sequence instead");
  Rng rng(seed);
  std::vector<double> means(replications);
  for (std::size_t r = 0; r < replications; ++r) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (population.family == Family::Normal) {
        sum += population.mu() + population.sigma() * rng.normal();
      } else {
        std::size_t successes = 0;
        for (std::size_t t = 0; t < population.trials(); ++t)
          if (rng.bernoulli(population.prob())) ++successes;
        sum += static_cast<double>(successes);
      }
    }
    means[r] = sum / static_cast<double>(n);
  }
  return summarize_means(std::move(means), distribution_label(population), n,
                         replications);
}

}  // namespace statkit

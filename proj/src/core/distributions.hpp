// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace statkit {

enum class Family { Normal, ChiSquare, StudentT, FisherF, Binomial };

// Tagged parameter pack for the five supported families. Use the
// factories; they validate parameters once so evaluation code can
// assume they hold.
struct Distribution {
  Family family = Family::Normal;
  double a = 0.0;  // mu | df | df | df1 | trials
  double b = 1.0;  // sigma | - | - | df2 | success probability

  static Distribution normal(double mu, double sigma);
  static Distribution chi_square(double df);
  static Distribution student_t(double df);
  static Distribution fisher_f(double df1, double df2);
  static Distribution binomial(std::size_t trials, double p);

  double mu() const { return a; }
  double sigma() const { return b; }
  double df() const { return a; }
  double df1() const { return a; }
  double df2() const { return b; }
  std::size_t trials() const { return static_cast<std::size_t>(a); }
  double prob() const { return b; }
};

// Short display form, e.g. "N(0, 1)", "t(19)", "chi-square(5)",
// "F(9, 9)", "B(10, 0.5)".
std::string distribution_label(const Distribution& d);

// Density (mass for Binomial). x must lie in the support: chi-square
// and F require x > 0, Binomial an integer in [0, trials].
double pdf(const Distribution& d, double x);

// P(X <= x); x outside the support clamps to 0 or 1. Continuous
// families other than the normal integrate the density by adaptive
// quadrature; absolute error stays below 1e-9. Binomial sums its mass
// exactly.
double cdf(const Distribution& d, double x);

// Smallest x with cdf(x) >= q for the Binomial; for continuous
// families, bracketing plus bisection to |cdf(x) - q| <= 1e-8.
double quantile(const Distribution& d, double q);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

// Closed-form mean/variance. Errors when undefined: StudentT needs
// df > 2, FisherF needs df2 > 4.
Moments moments(const Distribution& d);

// Coverage of mu +/- 1, 2, 3 sigma for a normal distribution.
std::array<double, 3> empirical_rule(const Distribution& d);

// Large-sample normal approximation gate for a Binomial: n > 20 and
// n*p beyond the threshold. Two published thresholds exist; 7 is the
// default, 5 the alternate.
inline constexpr double kBinomialApproxNpDefault = 7.0;
inline constexpr double kBinomialApproxNpAlternate = 5.0;
bool binomial_normal_approx_ok(std::size_t trials, double p,
                               double np_threshold = kBinomialApproxNpDefault);

struct CltReport {
  std::string population;
  std::size_t sample_size = 0;
  std::size_t replications = 0;
  double mean_of_means = 0.0;
  double sd_of_means = 0.0;        // sample sd across replications
  double skewness = 0.0;           // standardized third moment of the means
};

// Draws `replications` samples of size n with replacement from an
// empirical population and summarizes the distribution of the sample
// means. Deterministic for a fixed seed.
CltReport clt_simulate(const std::vector<double>& population, std::size_t n,
                       std::size_t replications, std::uint64_t seed);

// Same, sampling from a Normal or Binomial distribution. Other
// families have no variate generator here and are rejected.
CltReport clt_simulate(const Distribution& population, std::size_t n,
                       std::size_t replications, std::uint64_t seed);

}  // namespace statkit

// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core/distributions.hpp"

namespace statkit {

enum class Tail { Left, Right, Two };

const char* tail_name(Tail t);

struct TestResult {
  std::string name;            // e.g. "t test for a mean"
  double statistic = 0.0;
  Distribution reference;      // null distribution of the statistic
  Tail tail = Tail::Two;
  double p_value = 1.0;
  double alpha = 0.05;
  bool reject = false;         // true iff p_value < alpha
  std::string df_label;        // "df = 19", "df = (9, 9)", "exact"
};

struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.0;  // 1 - alpha
};

struct ErrorTypeTable {
  double alpha = 0.0;
  std::optional<double> power;  // 1 - beta, only when the caller supplies it
  std::string beta_note;        // "depends on power" placeholder otherwise
};

// Probability, under the reference, of a statistic as extreme or more
// extreme than s. Two-tailed doubling reflects around the center for
// symmetric references; for chi-square and F it is twice the smaller
// tail, capped at 1. Binomial references are not accepted here (use
// proportion_test for the exact branch).
double p_value(double s, const Distribution& reference, Tail tail);

// (xbar - mu0) / (sigma/sqrt(n)) against N(0, 1). With a population
// size N the standard error shrinks by sqrt((N - n)/(N - 1)).
TestResult z_test_mean(double xbar, std::size_t n, double mu0, double sigma,
                       Tail tail, double alpha,
                       std::optional<std::size_t> population_size = std::nullopt);

// (xbar - mu0) / (s/sqrt(n)) against t(n - 1).
TestResult t_test_mean(const std::vector<double>& sample, double mu0, Tail tail,
                       double alpha);

// (n - 1) s^2 / sigma0^2 against chi-square(n - 1).
TestResult chi2_test_variance(const std::vector<double>& sample, double sigma0_sq,
                              Tail tail, double alpha);

// s_a^2 / s_b^2 against F(n_a - 1, n_b - 1).
TestResult f_test_variance_ratio(const std::vector<double>& a,
                                 const std::vector<double>& b, Tail tail,
                                 double alpha);

// Large samples (n > 20 and n*p0 > 5, and an interior p-hat): normal
// statistic (p-hat - p0)/sqrt(p-hat(1-p-hat)/n). Otherwise the exact
// tail probability of B(n, p0); its "statistic" is the success count.
TestResult proportion_test(std::size_t successes, std::size_t trials, double p0,
                           Tail tail, double alpha);

// xbar +/- z_{1-alpha/2} * sigma/sqrt(n), sigma known.
ConfidenceInterval ci_mean_z(double xbar, std::size_t n, double sigma, double level);

// xbar +/- t_{n-1,1-alpha/2} * s/sqrt(n).
ConfidenceInterval ci_mean_t(const std::vector<double>& sample, double level);

// p-hat +/- z_{1-alpha/2} * sqrt(p-hat(1-p-hat)/n), clamped to [0, 1].
ConfidenceInterval ci_proportion(std::size_t successes, std::size_t trials,
                                 double level);

ErrorTypeTable error_type_table(double alpha,
                                std::optional<double> power = std::nullopt);

}  // namespace statkit

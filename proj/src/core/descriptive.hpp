// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "core/dataset.hpp"

namespace statkit {

struct SummaryStats {
  std::size_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  std::vector<double> modes;  // empty when every value is equally common
  double variance_sample = 0.0;
  double variance_population = 0.0;
  double sd_sample = 0.0;
  double sd_population = 0.0;
  double min = 0.0;
  double max = 0.0;
  double range = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double iqr = 0.0;
};

struct OutlierReport {
  double inner_lo = 0.0, inner_hi = 0.0;  // q1/q3 -/+ 1.5*iqr
  double outer_lo = 0.0, outer_hi = 0.0;  // q1/q3 -/+ 3*iqr
  std::vector<double> suspected;  // outside inner fences, inside outer
  std::vector<double> extreme;    // outside outer fences
};

double mean(const std::vector<double>& values);

// Sorted midpoint rule: x_{(n+1)/2} for odd n, else the average of the
// two central order statistics.
double median(const std::vector<double>& values);

// Values attaining the maximal count, ascending. Empty when every
// distinct value occurs equally often ("no mode").
std::vector<double> modes(const std::vector<double>& values);
std::vector<std::string> modes(const std::vector<std::string>& values);

// Order-statistic percentile, p in (0,100): with i = n*p/100 on the
// sorted data (1-based), integer i gives (x_i + x_{i+1})/2, otherwise
// x at position floor(i)+1. percentile(50) equals the median.
double percentile(const std::vector<double>& values, double p);

enum class VarianceMode { Sample, Population };
double variance(const std::vector<double>& values, VarianceMode mode);
double standard_deviation(const std::vector<double>& values, VarianceMode mode);

SummaryStats summarize(const std::vector<double>& values);
SummaryStats summarize(const Column& col);

// Tukey fences from the quartiles: values strictly beyond q -/+ 1.5*iqr
// are suspected outliers, strictly beyond 3*iqr are extreme. Requires
// n >= 4.
OutlierReport classify_outliers(const std::vector<double>& values);
OutlierReport classify_outliers(const Column& col);

}  // namespace statkit

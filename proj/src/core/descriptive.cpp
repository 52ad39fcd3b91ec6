// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#include "core/descriptive.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "core/errors.hpp"

namespace statkit {

namespace {

void require_nonempty(const std::vector<double>& values, const char* what) {
  if (values.empty())
    fail(ErrorCode::InvalidArgument, std::string(what) + " needs at least one value");
}

std::vector<double> sorted(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return values;
}

template <typename T>
std::vector<T> modal_values(const std::vector<T>& values) {
  if (values.empty())
    fail(ErrorCode::InvalidArgument, "mode needs at least one value");
  std::map<T, std::size_t> counts;
  for (const T& v : values) ++counts[v];
  std::size_t best = 0, worst = values.size();
  for (const auto& [value, count] : counts) {
    best = std::max(best, count);
    worst = std::min(worst, count);
  }
  if (best == worst) return {};  // every value equally common: no mode
  std::vector<T> out;
  for (const auto& [value, count] : counts)
    if (count == best) out.push_back(value);  // map order = ascending
  return out;
}

}  // namespace

double mean(const std::vector<double>& values) {
  require_nonempty(values, "mean");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double median(const std::vector<double>& values) {
  require_nonempty(values, "median");
  const std::vector<double> x = sorted(values);
  const std::size_t n = x.size();
  if (n % 2 == 1) return x[n / 2];
  return (x[n / 2 - 1] + x[n / 2]) / 2.0;
}

std::vector<double> modes(const std::vector<double>& values) {
  return modal_values(values);
}

std::vector<std::string> modes(const std::vector<std::string>& values) {
  return modal_values(values);
}

double percentile(const std::vector<double>& values, double p) {
  require_nonempty(values, "percentile");
  if (!(p > 0.0 && p < 100.0))
    fail(ErrorCode::InvalidArgument, "percentile order must lie in (0, 100)");
  const std::vector<double> x = sorted(values);
  const double n = static_cast<double>(x.size());
  const double i = n * p / 100.0;
  const double whole = std::floor(i);
  if (i == whole) {
    const std::size_t k = static_cast<std::size_t>(whole);  // 1-based x_k
    if (k >= x.size()) return x.back();
    return (x[k - 1] + x[k]) / 2.0;
  }
  std::size_t k = static_cast<std::size_t>(whole);  // 0-based index of x_{floor(i)+1}
  if (k >= x.size()) k = x.size() - 1;
  return x[k];
}

double variance(const std::vector<double>& values, VarianceMode mode) {
  const std::size_t need = mode == VarianceMode::Sample ? 2 : 1;
  if (values.size() < need)
    fail(ErrorCode::InvalidArgument,
         mode == VarianceMode::Sample ? "sample variance needs n >= 2"
                                      : "population variance needs n >= 1");
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) {
    const double d = v - m;
    ss += d * d;
  }
  const double denom = mode == VarianceMode::Sample
                           ? static_cast<double>(values.size() - 1)
                           : static_cast<double>(values.size());
  return ss / denom;
}

double standard_deviation(const std::vector<double>& values, VarianceMode mode) {
  return std::sqrt(variance(values, mode));
}

SummaryStats summarize(const std::vector<double>& values) {
  if (values.size() < 2)
    fail(ErrorCode::InvalidArgument, "summary needs at least two values");
  SummaryStats s;
  s.n = values.size();
  s.mean = mean(values);
  s.median = median(values);
  s.modes = modes(values);
  s.variance_sample = variance(values, VarianceMode::Sample);
  s.variance_population = variance(values, VarianceMode::Population);
  s.sd_sample = std::sqrt(s.variance_sample);
  s.sd_population = std::sqrt(s.variance_population);
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  s.min = *mn;
  s.max = *mx;
  s.range = s.max - s.min;
  s.q1 = percentile(values, 25.0);
  s.q3 = percentile(values, 75.0);
  s.iqr = s.q3 - s.q1;
  return s;
}

SummaryStats summarize(const Column& col) {
  if (!col.is_numeric())
    fail(ErrorCode::InvalidArgument, "column '" + col.name + "' is categorical; summary needs numbers");
  return summarize(col.numeric_values());
}

OutlierReport classify_outliers(const std::vector<double>& values) {
  if (values.size() < 4)
    fail(ErrorCode::InvalidArgument, "outlier fences need at least four values");
  const double q1 = percentile(values, 25.0);
  const double q3 = percentile(values, 75.0);
  const double iqr = q3 - q1;
  OutlierReport report;
  report.inner_lo = q1 - 1.5 * iqr;
  report.inner_hi = q3 + 1.5 * iqr;
  report.outer_lo = q1 - 3.0 * iqr;
  report.outer_hi = q3 + 3.0 * iqr;
  for (double v : values) {
    if (v < report.outer_lo || v > report.outer_hi)
      report.extreme.push_back(v);
    else if (v < report.inner_lo || v > report.inner_hi)
      report.suspected.push_back(v);
  }
  return report;
}

OutlierReport classify_outliers(const Column& col) {
  if (!col.is_numeric())
    fail(ErrorCode::InvalidArgument, "column '" + col.name + "' is categorical; fences need numbers");
  return classify_outliers(col.numeric_values());
}

}  // namespace statkit

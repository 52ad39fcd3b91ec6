// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#include "statkit/statkit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "core/classify.hpp"
#include "core/cluster.hpp"
#include "core/dataset.hpp"
#include "core/descriptive.hpp"
#include "core/distributions.hpp"
#include "core/errors.hpp"
#include "core/factor.hpp"
#include "core/inference.hpp"
#include "core/regression.hpp"
#include "core/report.hpp"

struct statkit_dataset {
  statkit::Dataset data;
};

struct statkit_model {
  statkit::LinearModel model;
  std::vector<double> y;
  statkit::AnovaTable anova;
  std::vector<statkit::CoefficientTest> tests;
};

struct statkit_efa {
  statkit::BartlettResult bartlett;
  statkit::KmoResult kmo;
  std::vector<double> eigenvalues;
  statkit::FactorSolution solution;
  std::vector<std::string> warnings;
};

struct statkit_dendrogram {
  statkit::Dendrogram d;
};

struct statkit_oner {
  statkit::OneRRule rule;
};

namespace {

thread_local std::string g_last_error;

statkit_status to_status(statkit::ErrorCode code) {
  switch (code) {
    case statkit::ErrorCode::InvalidArgument: return STATKIT_ERR_INVALID_ARGUMENT;
    case statkit::ErrorCode::Config: return STATKIT_ERR_CONFIG;
    case statkit::ErrorCode::Data: return STATKIT_ERR_DATA;
    case statkit::ErrorCode::Numeric: return STATKIT_ERR_NUMERIC;
    case statkit::ErrorCode::Io: return STATKIT_ERR_IO;
  }
  return STATKIT_ERR_INTERNAL;
}

template <typename Fn>
statkit_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return STATKIT_OK;
  } catch (const statkit::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return STATKIT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return STATKIT_ERR_INTERNAL;
  }
}

void require(bool ok, const char* message) {
  if (!ok) statkit::fail(statkit::ErrorCode::InvalidArgument, message);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

double* dup_doubles(const std::vector<double>& v) {
  double* out = static_cast<double*>(std::malloc(sizeof(double) * std::max<std::size_t>(v.size(), 1)));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, v.data(), sizeof(double) * v.size());
  return out;
}

void copy_to(char* dst, std::size_t cap, const std::string& src) {
  std::snprintf(dst, cap, "%s", src.c_str());
}

statkit::Distribution make_distribution(statkit_family family, double a, double b) {
  switch (family) {
    case STATKIT_DIST_NORMAL: return statkit::Distribution::normal(a, b);
    case STATKIT_DIST_CHI_SQUARE: return statkit::Distribution::chi_square(a);
    case STATKIT_DIST_STUDENT_T: return statkit::Distribution::student_t(a);
    case STATKIT_DIST_FISHER_F: return statkit::Distribution::fisher_f(a, b);
    case STATKIT_DIST_BINOMIAL:
      return statkit::Distribution::binomial(static_cast<std::size_t>(a), b);
  }
  statkit::fail(statkit::ErrorCode::InvalidArgument, "unknown distribution family");
}

statkit::Tail make_tail(statkit_tail tail) {
  switch (tail) {
    case STATKIT_TAIL_LEFT: return statkit::Tail::Left;
    case STATKIT_TAIL_RIGHT: return statkit::Tail::Right;
    case STATKIT_TAIL_TWO: return statkit::Tail::Two;
  }
  statkit::fail(statkit::ErrorCode::InvalidArgument, "unknown tail code");
}

statkit::LinkageKind make_linkage(statkit_linkage linkage) {
  switch (linkage) {
    case STATKIT_LINKAGE_SINGLE: return statkit::LinkageKind::Single;
    case STATKIT_LINKAGE_COMPLETE: return statkit::LinkageKind::Complete;
    case STATKIT_LINKAGE_AVERAGE_BETWEEN: return statkit::LinkageKind::AverageBetween;
    case STATKIT_LINKAGE_AVERAGE_WITHIN: return statkit::LinkageKind::AverageWithin;
    case STATKIT_LINKAGE_CENTROID: return statkit::LinkageKind::Centroid;
    case STATKIT_LINKAGE_WARD: return statkit::LinkageKind::Ward;
  }
  statkit::fail(statkit::ErrorCode::InvalidArgument, "unknown linkage code");
}

void fill_test_result(const statkit::TestResult& r, statkit_test_result* out) {
  copy_to(out->name, sizeof(out->name), r.name);
  out->statistic = r.statistic;
  copy_to(out->reference, sizeof(out->reference),
          statkit::distribution_label(r.reference));
  copy_to(out->df_label, sizeof(out->df_label), r.df_label);
  out->tail = r.tail == statkit::Tail::Left    ? STATKIT_TAIL_LEFT
              : r.tail == statkit::Tail::Right ? STATKIT_TAIL_RIGHT
                                               : STATKIT_TAIL_TWO;
  out->p_value = r.p_value;
  out->alpha = r.alpha;
  out->reject = r.reject ? 1 : 0;
}

std::vector<double> to_vector(const double* data, std::size_t n, const char* what) {
  require(data != nullptr || n == 0, what);
  return std::vector<double>(data, data + n);
}

statkit::Matrix to_matrix(const double* data, std::size_t n, std::size_t p,
                          const char* what) {
  require(data != nullptr || n * p == 0, what);
  statkit::Matrix out(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) out(i, j) = data[i * p + j];
  return out;
}

void fill_clt(const statkit::CltReport& report, double* mean_out, double* sd_out,
              double* skew_out) {
  if (mean_out != nullptr) *mean_out = report.mean_of_means;
  if (sd_out != nullptr) *sd_out = report.sd_of_means;
  if (skew_out != nullptr) *skew_out = report.skewness;
}

}  // namespace

extern "C" {

const char* statkit_version(void) { return "0.1.0"; }

const char* statkit_last_error(void) { return g_last_error.c_str(); }

void statkit_string_free(char* s) { std::free(s); }

void statkit_buffer_free(void* p) { std::free(p); }

/* ------------------------------ datasets ------------------------- */

statkit_status statkit_dataset_load_csv(const char* path, const char* schema,
                                        statkit_dataset** out) {
  return guard([&] {
    require(path != nullptr, "path must not be NULL");
    require(out != nullptr, "out must not be NULL");
    auto handle = std::make_unique<statkit_dataset>();
    handle->data =
        statkit::load_csv(path, statkit::parse_schema(schema ? schema : ""));
    *out = handle.release();
  });
}

statkit_status statkit_dataset_parse_csv(const char* text, const char* schema,
                                         statkit_dataset** out) {
  return guard([&] {
    require(text != nullptr, "text must not be NULL");
    require(out != nullptr, "out must not be NULL");
    auto handle = std::make_unique<statkit_dataset>();
    handle->data =
        statkit::load_csv_text(text, statkit::parse_schema(schema ? schema : ""));
    *out = handle.release();
  });
}

void statkit_dataset_free(statkit_dataset* dataset) { delete dataset; }

statkit_status statkit_dataset_rows(const statkit_dataset* dataset, size_t* out) {
  return guard([&] {
    require(dataset != nullptr && out != nullptr, "arguments must not be NULL");
    *out = dataset->data.row_count();
  });
}

statkit_status statkit_dataset_columns(const statkit_dataset* dataset, size_t* out) {
  return guard([&] {
    require(dataset != nullptr && out != nullptr, "arguments must not be NULL");
    *out = dataset->data.column_count();
  });
}

statkit_status statkit_dataset_column_name(const statkit_dataset* dataset,
                                           size_t index, char** out) {
  return guard([&] {
    require(dataset != nullptr && out != nullptr, "arguments must not be NULL");
    require(index < dataset->data.column_count(), "column index out of range");
    *out = dup_string(dataset->data.columns[index].name);
  });
}

statkit_status statkit_dataset_column_kind(const statkit_dataset* dataset,
                                           const char* column, char** out) {
  return guard([&] {
    require(dataset != nullptr && column != nullptr && out != nullptr,
            "arguments must not be NULL");
    *out = dup_string(
        statkit::variable_kind_name(dataset->data.column(column).kind));
  });
}

/* ------------------------------ descriptive ---------------------- */

statkit_status statkit_summary(const statkit_dataset* dataset, const char* column,
                               statkit_summary_stats* out) {
  return guard([&] {
    require(dataset != nullptr && column != nullptr && out != nullptr,
            "arguments must not be NULL");
    const statkit::SummaryStats s =
        statkit::summarize(dataset->data.column(column));
    out->n = s.n;
    out->mean = s.mean;
    out->median = s.median;
    out->variance_sample = s.variance_sample;
    out->variance_population = s.variance_population;
    out->sd_sample = s.sd_sample;
    out->sd_population = s.sd_population;
    out->min = s.min;
    out->max = s.max;
    out->range = s.range;
    out->q1 = s.q1;
    out->q3 = s.q3;
    out->iqr = s.iqr;
  });
}

statkit_status statkit_modes(const statkit_dataset* dataset, const char* column,
                             double** out, size_t* count) {
  return guard([&] {
    require(dataset != nullptr && column != nullptr && out != nullptr &&
                count != nullptr,
            "arguments must not be NULL");
    const statkit::Column& col = dataset->data.column(column);
    require(col.is_numeric(), "modes over the C interface need a numeric column");
    const std::vector<double> m = statkit::modes(col.numeric_values());
    *out = dup_doubles(m);
    *count = m.size();
  });
}

statkit_status statkit_percentile(const statkit_dataset* dataset, const char* column,
                                  double p, double* out) {
  return guard([&] {
    require(dataset != nullptr && column != nullptr && out != nullptr,
            "arguments must not be NULL");
    *out = statkit::percentile(dataset->data.column(column).numeric_values(), p);
  });
}

statkit_status statkit_outliers(const statkit_dataset* dataset, const char* column,
                                double* inner_lo, double* inner_hi, double* outer_lo,
                                double* outer_hi, double** suspected,
                                size_t* suspected_count, double** extreme,
                                size_t* extreme_count) {
  return guard([&] {
    require(dataset != nullptr && column != nullptr, "arguments must not be NULL");
    const statkit::OutlierReport r =
        statkit::classify_outliers(dataset->data.column(column));
    if (inner_lo != nullptr) *inner_lo = r.inner_lo;
    if (inner_hi != nullptr) *inner_hi = r.inner_hi;
    if (outer_lo != nullptr) *outer_lo = r.outer_lo;
    if (outer_hi != nullptr) *outer_hi = r.outer_hi;
    if (suspected != nullptr) {
      require(suspected_count != nullptr, "suspected_count must not be NULL");
      *suspected = dup_doubles(r.suspected);
      *suspected_count = r.suspected.size();
    }
    if (extreme != nullptr) {
      require(extreme_count != nullptr, "extreme_count must not be NULL");
      *extreme = dup_doubles(r.extreme);
      *extreme_count = r.extreme.size();
    }
  });
}

/* ------------------------------ distributions -------------------- */

statkit_status statkit_pdf(statkit_family family, double a, double b, double x,
                           double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    *out = statkit::pdf(make_distribution(family, a, b), x);
  });
}

statkit_status statkit_cdf(statkit_family family, double a, double b, double x,
                           double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    *out = statkit::cdf(make_distribution(family, a, b), x);
  });
}

statkit_status statkit_quantile(statkit_family family, double a, double b, double q,
                                double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    *out = statkit::quantile(make_distribution(family, a, b), q);
  });
}

statkit_status statkit_moments(statkit_family family, double a, double b,
                               double* mean_out, double* sd_out) {
  return guard([&] {
    const statkit::Moments m = statkit::moments(make_distribution(family, a, b));
    if (mean_out != nullptr) *mean_out = m.mean;
    if (sd_out != nullptr) *sd_out = std::sqrt(m.variance);
  });
}

statkit_status statkit_empirical_rule(double mean, double sd,
                                      double coverage_out[3]) {
  return guard([&] {
    require(coverage_out != nullptr, "coverage_out must not be NULL");
    const auto coverage =
        statkit::empirical_rule(statkit::Distribution::normal(mean, sd));
    coverage_out[0] = coverage[0];
    coverage_out[1] = coverage[1];
    coverage_out[2] = coverage[2];
  });
}

statkit_status statkit_clt_population(const double* population, size_t length,
                                      size_t n, size_t replications, uint64_t seed,
                                      double* mean_out, double* sd_out,
                                      double* skew_out) {
  return guard([&] {
    fill_clt(statkit::clt_simulate(
                 to_vector(population, length, "population must not be NULL"), n,
                 replications, seed),
             mean_out, sd_out, skew_out);
  });
}

statkit_status statkit_clt_distribution(statkit_family family, double a, double b,
                                        size_t n, size_t replications, uint64_t seed,
                                        double* mean_out, double* sd_out,
                                        double* skew_out) {
  return guard([&] {
    fill_clt(statkit::clt_simulate(make_distribution(family, a, b), n, replications,
                                   seed),
             mean_out, sd_out, skew_out);
  });
}

/* ------------------------------ inference ------------------------ */

statkit_status statkit_z_test_mean(double xbar, size_t n, double mu0, double sigma,
                                   statkit_tail tail, double alpha,
                                   size_t population_size,
                                   statkit_test_result* out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    std::optional<std::size_t> population;
    if (population_size > 0) population = population_size;
    fill_test_result(statkit::z_test_mean(xbar, n, mu0, sigma, make_tail(tail),
                                          alpha, population),
                     out);
  });
}

statkit_status statkit_t_test_mean(const double* sample, size_t n, double mu0,
                                   statkit_tail tail, double alpha,
                                   statkit_test_result* out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    fill_test_result(
        statkit::t_test_mean(to_vector(sample, n, "sample must not be NULL"), mu0,
                             make_tail(tail), alpha),
        out);
  });
}

statkit_status statkit_chi2_test_variance(const double* sample, size_t n,
                                          double sigma0_sq, statkit_tail tail,
                                          double alpha, statkit_test_result* out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    fill_test_result(statkit::chi2_test_variance(
                         to_vector(sample, n, "sample must not be NULL"), sigma0_sq,
                         make_tail(tail), alpha),
                     out);
  });
}

statkit_status statkit_f_test_variance_ratio(const double* a, size_t n_a,
                                             const double* b, size_t n_b,
                                             statkit_tail tail, double alpha,
                                             statkit_test_result* out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    fill_test_result(
        statkit::f_test_variance_ratio(to_vector(a, n_a, "a must not be NULL"),
                                       to_vector(b, n_b, "b must not be NULL"),
                                       make_tail(tail), alpha),
        out);
  });
}

statkit_status statkit_proportion_test(size_t successes, size_t trials, double p0,
                                       statkit_tail tail, double alpha,
                                       statkit_test_result* out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    fill_test_result(
        statkit::proportion_test(successes, trials, p0, make_tail(tail), alpha),
        out);
  });
}

statkit_status statkit_ci_mean_z(double xbar, size_t n, double sigma, double level,
                                 double* lower, double* upper) {
  return guard([&] {
    require(lower != nullptr && upper != nullptr, "arguments must not be NULL");
    const statkit::ConfidenceInterval ci = statkit::ci_mean_z(xbar, n, sigma, level);
    *lower = ci.lower;
    *upper = ci.upper;
  });
}

statkit_status statkit_ci_mean_t(const double* sample, size_t n, double level,
                                 double* lower, double* upper) {
  return guard([&] {
    require(lower != nullptr && upper != nullptr, "arguments must not be NULL");
    const statkit::ConfidenceInterval ci =
        statkit::ci_mean_t(to_vector(sample, n, "sample must not be NULL"), level);
    *lower = ci.lower;
    *upper = ci.upper;
  });
}

statkit_status statkit_ci_proportion(size_t successes, size_t trials, double level,
                                     double* lower, double* upper) {
  return guard([&] {
    require(lower != nullptr && upper != nullptr, "arguments must not be NULL");
    const statkit::ConfidenceInterval ci =
        statkit::ci_proportion(successes, trials, level);
    *lower = ci.lower;
    *upper = ci.upper;
  });
}

/* ------------------------------ regression ----------------------- */

statkit_status statkit_ols_fit(const double* x, size_t n, size_t p, const double* y,
                               statkit_model** out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    auto handle = std::make_unique<statkit_model>();
    handle->y = to_vector(y, n, "y must not be NULL");
    handle->model = statkit::fit_ols(to_matrix(x, n, p, "x must not be NULL"),
                                     handle->y);
    handle->anova = statkit::anova(handle->model, handle->y);
    handle->tests = statkit::coefficient_tests(handle->model, handle->y);
    *out = handle.release();
  });
}

void statkit_model_free(statkit_model* model) { delete model; }

statkit_status statkit_model_coefficients(const statkit_model* model, double** out,
                                          size_t* count) {
  return guard([&] {
    require(model != nullptr && out != nullptr && count != nullptr,
            "arguments must not be NULL");
    *out = dup_doubles(model->model.coefficients);
    *count = model->model.coefficients.size();
  });
}

statkit_status statkit_model_anova(const statkit_model* model, statkit_anova* out) {
  return guard([&] {
    require(model != nullptr && out != nullptr, "arguments must not be NULL");
    out->sst = model->anova.sst;
    out->ssm = model->anova.ssm;
    out->sse = model->anova.sse;
    out->dfm = model->anova.dfm;
    out->dfe = model->anova.dfe;
    out->msm = model->anova.msm;
    out->mse = model->anova.mse;
    out->f = model->anova.f;
    out->p_value = model->anova.p_value;
  });
}

statkit_status statkit_model_coefficient_test(const statkit_model* model,
                                              size_t index, double* estimate,
                                              double* se, double* t, double* p_value,
                                              int* defined) {
  return guard([&] {
    require(model != nullptr, "model must not be NULL");
    require(index < model->tests.size(), "coefficient index out of range");
    const statkit::CoefficientTest& test = model->tests[index];
    if (estimate != nullptr) *estimate = test.estimate;
    if (se != nullptr) *se = test.standard_error;
    if (t != nullptr) *t = test.t;
    if (p_value != nullptr) *p_value = test.p_value;
    if (defined != nullptr) *defined = test.defined ? 1 : 0;
  });
}

statkit_status statkit_model_r_squared(const statkit_model* model, double* out) {
  return guard([&] {
    require(model != nullptr && out != nullptr, "arguments must not be NULL");
    *out = statkit::r_squared(model->anova);
  });
}

statkit_status statkit_model_predict(const statkit_model* model, const double* x_new,
                                     size_t p, double* out) {
  return guard([&] {
    require(model != nullptr && out != nullptr, "arguments must not be NULL");
    *out = statkit::predict(model->model,
                            to_vector(x_new, p, "x_new must not be NULL"));
  });
}

/* ------------------------------ factor analysis ------------------ */

statkit_status statkit_efa_run(const double* data, size_t n, size_t p,
                               size_t factors, statkit_extraction extraction,
                               statkit_rotation rotation, statkit_efa** out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    const statkit::CorrelationMatrix r =
        statkit::correlation_matrix(to_matrix(data, n, p, "data must not be NULL"));

    auto handle = std::make_unique<statkit_efa>();
    handle->bartlett = statkit::bartlett_sphericity(r);
    handle->kmo = statkit::kmo(r);
    const statkit::EigenPairs eigen = statkit::eigen_symmetric(r.r);
    handle->eigenvalues = eigen.values;

    std::size_t m = factors;
    if (m == 0) {
      m = statkit::retain(eigen.values, statkit::RetentionRule::Kaiser, 0.0,
                          &handle->warnings);
      if (m >= p) m = p - 1;
    }

    switch (extraction) {
      case STATKIT_EXTRACT_PCA:
        handle->solution = statkit::extract_pca(r, m);
        break;
      case STATKIT_EXTRACT_PRINCIPAL_AXIS:
        handle->solution = statkit::extract_principal_axis(r, m);
        break;
      default:
        statkit::fail(statkit::ErrorCode::InvalidArgument,
                      "unknown extraction code");
    }
    switch (rotation) {
      case STATKIT_ROTATE_NONE:
        break;
      case STATKIT_ROTATE_VARIMAX:
        handle->solution = statkit::rotate(handle->solution,
                                           statkit::RotationKind::Varimax);
        break;
      case STATKIT_ROTATE_QUARTIMAX:
        handle->solution = statkit::rotate(handle->solution,
                                           statkit::RotationKind::Quartimax);
        break;
      default:
        statkit::fail(statkit::ErrorCode::InvalidArgument, "unknown rotation code");
    }
    handle->warnings.insert(handle->warnings.end(),
                            handle->solution.warnings.begin(),
                            handle->solution.warnings.end());
    *out = handle.release();
  });
}

void statkit_efa_free(statkit_efa* efa) { delete efa; }

statkit_status statkit_efa_factor_count(const statkit_efa* efa, size_t* out) {
  return guard([&] {
    require(efa != nullptr && out != nullptr, "arguments must not be NULL");
    *out = efa->solution.loadings.cols();
  });
}

statkit_status statkit_efa_loadings(const statkit_efa* efa, double** out, size_t* p,
                                    size_t* m) {
  return guard([&] {
    require(efa != nullptr && out != nullptr && p != nullptr && m != nullptr,
            "arguments must not be NULL");
    const statkit::Matrix& loadings = efa->solution.loadings;
    std::vector<double> flat(loadings.rows() * loadings.cols());
    for (std::size_t i = 0; i < loadings.rows(); ++i)
      for (std::size_t j = 0; j < loadings.cols(); ++j)
        flat[i * loadings.cols() + j] = loadings(i, j);
    *out = dup_doubles(flat);
    *p = loadings.rows();
    *m = loadings.cols();
  });
}

statkit_status statkit_efa_communalities(const statkit_efa* efa, double** out,
                                         size_t* count) {
  return guard([&] {
    require(efa != nullptr && out != nullptr && count != nullptr,
            "arguments must not be NULL");
    *out = dup_doubles(efa->solution.communalities);
    *count = efa->solution.communalities.size();
  });
}

statkit_status statkit_efa_eigenvalues(const statkit_efa* efa, double** out,
                                       size_t* count) {
  return guard([&] {
    require(efa != nullptr && out != nullptr && count != nullptr,
            "arguments must not be NULL");
    *out = dup_doubles(efa->eigenvalues);
    *count = efa->eigenvalues.size();
  });
}

statkit_status statkit_efa_bartlett(const statkit_efa* efa, double* statistic,
                                    size_t* df, double* p_value) {
  return guard([&] {
    require(efa != nullptr, "efa must not be NULL");
    if (statistic != nullptr) *statistic = efa->bartlett.statistic;
    if (df != nullptr) *df = efa->bartlett.df;
    if (p_value != nullptr) *p_value = efa->bartlett.p_value;
  });
}

statkit_status statkit_efa_kmo(const statkit_efa* efa, double* overall,
                               char** band) {
  return guard([&] {
    require(efa != nullptr, "efa must not be NULL");
    if (overall != nullptr) *overall = efa->kmo.overall;
    if (band != nullptr) *band = dup_string(efa->kmo.band);
  });
}

statkit_status statkit_efa_warning_count(const statkit_efa* efa, size_t* out) {
  return guard([&] {
    require(efa != nullptr && out != nullptr, "arguments must not be NULL");
    *out = efa->warnings.size();
  });
}

statkit_status statkit_efa_warning(const statkit_efa* efa, size_t index,
                                   char** out) {
  return guard([&] {
    require(efa != nullptr && out != nullptr, "arguments must not be NULL");
    require(index < efa->warnings.size(), "warning index out of range");
    *out = dup_string(efa->warnings[index]);
  });
}

statkit_status statkit_cronbach(const double* items, size_t n, size_t k,
                                double* alpha, char** band) {
  return guard([&] {
    const statkit::CronbachResult r =
        statkit::cronbach_alpha(to_matrix(items, n, k, "items must not be NULL"));
    if (alpha != nullptr) *alpha = r.alpha;
    if (band != nullptr) *band = dup_string(r.band);
  });
}

/* ------------------------------ clustering ----------------------- */

statkit_status statkit_hierarchical_points(const double* points, size_t n,
                                           size_t dim, statkit_linkage linkage,
                                           statkit_dendrogram** out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    auto handle = std::make_unique<statkit_dendrogram>();
    handle->d = statkit::agglomerate_points(
        to_matrix(points, n, dim, "points must not be NULL"),
        make_linkage(linkage));
    *out = handle.release();
  });
}

statkit_status statkit_hierarchical_matrix(const double* dissimilarity, size_t n,
                                           statkit_linkage linkage,
                                           statkit_dendrogram** out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    auto handle = std::make_unique<statkit_dendrogram>();
    handle->d = statkit::agglomerate_matrix(
        to_matrix(dissimilarity, n, n, "dissimilarity must not be NULL"),
        make_linkage(linkage));
    *out = handle.release();
  });
}

void statkit_dendrogram_free(statkit_dendrogram* dendrogram) { delete dendrogram; }

statkit_status statkit_dendrogram_leaves(const statkit_dendrogram* dendrogram,
                                         size_t* out) {
  return guard([&] {
    require(dendrogram != nullptr && out != nullptr, "arguments must not be NULL");
    *out = dendrogram->d.leaves;
  });
}

statkit_status statkit_dendrogram_step(const statkit_dendrogram* dendrogram,
                                       size_t step, size_t* a, size_t* b,
                                       double* height, size_t* size) {
  return guard([&] {
    require(dendrogram != nullptr, "dendrogram must not be NULL");
    require(step < dendrogram->d.steps.size(), "merge step out of range");
    const statkit::MergeStep& m = dendrogram->d.steps[step];
    if (a != nullptr) *a = m.a;
    if (b != nullptr) *b = m.b;
    if (height != nullptr) *height = m.height;
    if (size != nullptr) *size = m.size;
  });
}

statkit_status statkit_dendrogram_cut(const statkit_dendrogram* dendrogram, size_t k,
                                      size_t* labels) {
  return guard([&] {
    require(dendrogram != nullptr && labels != nullptr,
            "arguments must not be NULL");
    const std::vector<std::size_t> cut = statkit::cut(dendrogram->d, k);
    std::memcpy(labels, cut.data(), sizeof(size_t) * cut.size());
  });
}

statkit_status statkit_kmeans(const double* points, size_t n, size_t dim, size_t k,
                              statkit_kmeans_init init, uint64_t seed,
                              size_t max_iter, size_t* assignment, double* centroids,
                              double* wss, size_t* iterations, int* converged) {
  return guard([&] {
    require(assignment != nullptr && centroids != nullptr,
            "assignment and centroids must not be NULL");
    statkit::KMeansInit spec;
    switch (init) {
      case STATKIT_KMEANS_FARTHEST_FIRST:
        spec.kind = statkit::KMeansInit::Kind::FarthestFirst;
        break;
      case STATKIT_KMEANS_SEEDED_RANDOM:
        spec.kind = statkit::KMeansInit::Kind::SeededRandom;
        break;
      default:
        statkit::fail(statkit::ErrorCode::InvalidArgument, "unknown init code");
    }
    spec.seed = seed;
    const statkit::KMeansResult result = statkit::kmeans(
        to_matrix(points, n, dim, "points must not be NULL"), k, spec, max_iter);
    std::memcpy(assignment, result.assignment.data(), sizeof(size_t) * n);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t j = 0; j < dim; ++j)
        centroids[c * dim + j] = result.centroids(c, j);
    if (wss != nullptr) *wss = result.wss;
    if (iterations != nullptr) *iterations = result.iterations;
    if (converged != nullptr) *converged = result.converged ? 1 : 0;
  });
}

/* ------------------------------ classification ------------------- */

statkit_status statkit_oner_train(const statkit_dataset* dataset,
                                  const char* class_column, size_t bins,
                                  statkit_oner** out) {
  return guard([&] {
    require(dataset != nullptr && class_column != nullptr && out != nullptr,
            "arguments must not be NULL");
    auto handle = std::make_unique<statkit_oner>();
    handle->rule = statkit::train_oner(
        statkit::labeled(dataset->data, class_column), bins);
    *out = handle.release();
  });
}

void statkit_oner_free(statkit_oner* oner) { delete oner; }

statkit_status statkit_oner_attribute(const statkit_oner* oner, char** out) {
  return guard([&] {
    require(oner != nullptr && out != nullptr, "arguments must not be NULL");
    *out = dup_string(oner->rule.attribute);
  });
}

statkit_status statkit_oner_default_class(const statkit_oner* oner, char** out) {
  return guard([&] {
    require(oner != nullptr && out != nullptr, "arguments must not be NULL");
    *out = dup_string(oner->rule.default_class);
  });
}

statkit_status statkit_oner_training_error(const statkit_oner* oner, double* out) {
  return guard([&] {
    require(oner != nullptr && out != nullptr, "arguments must not be NULL");
    *out = oner->rule.training_error;
  });
}

statkit_status statkit_oner_predict_label(const statkit_oner* oner,
                                          const char* value, char** out_class,
                                          int* used_default) {
  return guard([&] {
    require(oner != nullptr && value != nullptr && out_class != nullptr,
            "arguments must not be NULL");
    statkit::CellValue cell;
    cell.label = value;
    const statkit::Prediction p = statkit::predict_oner(oner->rule, cell);
    *out_class = dup_string(p.label);
    if (used_default != nullptr) *used_default = p.used_default ? 1 : 0;
  });
}

statkit_status statkit_oner_predict_number(const statkit_oner* oner, double value,
                                           char** out_class, int* used_default) {
  return guard([&] {
    require(oner != nullptr && out_class != nullptr, "arguments must not be NULL");
    statkit::CellValue cell;
    cell.numeric = true;
    cell.number = value;
    const statkit::Prediction p = statkit::predict_oner(oner->rule, cell);
    *out_class = dup_string(p.label);
    if (used_default != nullptr) *used_default = p.used_default ? 1 : 0;
  });
}

statkit_status statkit_knn_predict(const statkit_dataset* dataset,
                                   const char* class_column, const double* query,
                                   size_t dim, size_t k,
                                   statkit_distance_kind distance,
                                   double minkowski_c, char** out_class) {
  return guard([&] {
    require(dataset != nullptr && class_column != nullptr && out_class != nullptr,
            "arguments must not be NULL");
    statkit::DistanceSpec spec;
    switch (distance) {
      case STATKIT_DISTANCE_EUCLIDEAN:
        spec.kind = statkit::DistanceKind::Euclidean;
        break;
      case STATKIT_DISTANCE_MINKOWSKI:
        spec.kind = statkit::DistanceKind::Minkowski;
        spec.minkowski_c = minkowski_c;
        break;
      case STATKIT_DISTANCE_COSINE:
        spec.kind = statkit::DistanceKind::CosineDissimilarity;
        break;
      case STATKIT_DISTANCE_JACCARD:
        spec.kind = statkit::DistanceKind::JaccardDissimilarity;
        break;
      default:
        statkit::fail(statkit::ErrorCode::InvalidArgument, "unknown distance code");
    }
    *out_class = dup_string(statkit::knn_predict(
        statkit::labeled(dataset->data, class_column),
        to_vector(query, dim, "query must not be NULL"), k, spec));
  });
}

/* ------------------------------ report pipeline ------------------ */

statkit_status statkit_run_config(const char* config_path,
                                  const char* output_override,
                                  char** report_path) {
  return guard([&] {
    require(config_path != nullptr, "config_path must not be NULL");
    statkit::PipelineConfig config = statkit::load_config(config_path);
    if (output_override != nullptr && *output_override != '\0')
      config.output = output_override;
    const statkit::RunResult result = statkit::run(config);
    if (report_path != nullptr) *report_path = dup_string(result.report_path);
  });
}

statkit_status statkit_describe_csv(const char* path, const char* schema,
                                    const char* column, char** out) {
  return guard([&] {
    require(path != nullptr && out != nullptr, "arguments must not be NULL");
    *out = dup_string(statkit::describe_csv(path, schema ? schema : "",
                                            column ? column : ""));
  });
}

} /* extern "C" */

// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library interface as an external C client:
// opaque handles, status codes, thread-local error text and the
// caller-owned string/buffer protocol.

#include <cmath>
#include <cstring>
#include <string>

#include <doctest.h>

#include "statkit/statkit.h"
#include "support/reference_values.hpp"
#include "support/temp_dir.hpp"

namespace {

// Convenience wrapper keeping ownership rules out of the assertions.
std::string take_string(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  statkit_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error text follow the documented protocol") {
  CHECK(std::string(statkit_version()) == "0.1.0");

  size_t rows = 0;
  CHECK(statkit_dataset_rows(nullptr, &rows) == STATKIT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(statkit_last_error()) != "");

  statkit_dataset* ds = nullptr;
  REQUIRE(statkit_dataset_parse_csv("a\n1\n", nullptr, &ds) == STATKIT_OK);
  CHECK(std::string(statkit_last_error()) == "");
  statkit_dataset_free(ds);
}

TEST_CASE("datasets load, parse and expose their shape") {
  statkit_dataset* ds = nullptr;
  REQUIRE(statkit_dataset_parse_csv("a,b\n1,x\n2,y\n3,\n", nullptr, &ds) ==
          STATKIT_OK);

  size_t rows = 0, cols = 0;
  CHECK(statkit_dataset_rows(ds, &rows) == STATKIT_OK);
  CHECK(statkit_dataset_columns(ds, &cols) == STATKIT_OK);
  CHECK(rows == 3);
  CHECK(cols == 2);

  char* name = nullptr;
  REQUIRE(statkit_dataset_column_name(ds, 0, &name) == STATKIT_OK);
  CHECK(take_string(name) == "a");
  REQUIRE(statkit_dataset_column_name(ds, 1, &name) == STATKIT_OK);
  CHECK(take_string(name) == "b");
  CHECK(statkit_dataset_column_name(ds, 2, &name) ==
        STATKIT_ERR_INVALID_ARGUMENT);

  char* kind = nullptr;
  REQUIRE(statkit_dataset_column_kind(ds, "a", &kind) == STATKIT_OK);
  CHECK(take_string(kind) == "discrete");
  REQUIRE(statkit_dataset_column_kind(ds, "b", &kind) == STATKIT_OK);
  CHECK(take_string(kind) == "nominal");
  CHECK(statkit_dataset_column_kind(ds, "zzz", &kind) == STATKIT_ERR_DATA);
  statkit_dataset_free(ds);

  // Schema overrides replace inferred kinds.
  REQUIRE(statkit_dataset_parse_csv("a\n1\n2\n", "a=continuous", &ds) ==
          STATKIT_OK);
  REQUIRE(statkit_dataset_column_kind(ds, "a", &kind) == STATKIT_OK);
  CHECK(take_string(kind) == "continuous");
  statkit_dataset_free(ds);

  // Ragged rows are a data error, not a crash.
  CHECK(statkit_dataset_parse_csv("a,b\n1\n", nullptr, &ds) == STATKIT_ERR_DATA);

  testsupport::TempDir dir;
  const std::string csv = dir.write("t.csv", "v\n1\n2\n3\n");
  REQUIRE(statkit_dataset_load_csv(csv.c_str(), nullptr, &ds) == STATKIT_OK);
  CHECK(statkit_dataset_rows(ds, &rows) == STATKIT_OK);
  CHECK(rows == 3);
  statkit_dataset_free(ds);
  CHECK(statkit_dataset_load_csv((dir.path() / "gone.csv").c_str(), nullptr,
                                 &ds) == STATKIT_ERR_IO);
}

TEST_CASE("summaries, modes, percentiles and outliers cross the boundary") {
  statkit_dataset* ds = nullptr;
  REQUIRE(statkit_dataset_parse_csv("v\n2\n4\n4\n4\n5\n5\n7\n9\n", nullptr,
                                    &ds) == STATKIT_OK);

  statkit_summary_stats s;
  REQUIRE(statkit_summary(ds, "v", &s) == STATKIT_OK);
  CHECK(s.n == 8);
  CHECK(s.mean == 5.0);
  CHECK(s.median == 4.5);
  CHECK(s.variance_population == 4.0);
  CHECK(s.sd_population == 2.0);
  CHECK(s.variance_sample == doctest::Approx(32.0 / 7.0).epsilon(1e-12));
  CHECK(s.min == 2.0);
  CHECK(s.max == 9.0);
  CHECK(s.range == 7.0);
  CHECK(s.q1 == 4.0);
  CHECK(s.q3 == 6.0);
  CHECK(s.iqr == 2.0);

  double* modes = nullptr;
  size_t count = 0;
  REQUIRE(statkit_modes(ds, "v", &modes, &count) == STATKIT_OK);
  REQUIRE(count == 1);
  CHECK(modes[0] == 4.0);
  statkit_buffer_free(modes);

  double value = 0.0;
  REQUIRE(statkit_percentile(ds, "v", 50.0, &value) == STATKIT_OK);
  CHECK(value == 4.5);
  REQUIRE(statkit_percentile(ds, "v", 90.0, &value) == STATKIT_OK);
  CHECK(value == 9.0);
  statkit_dataset_free(ds);

  REQUIRE(statkit_dataset_parse_csv(
              "v\n1\n2\n3\n4\n5\n6\n7\n8\n9\n10\n100\n", nullptr, &ds) ==
          STATKIT_OK);
  double inner_lo = 0, inner_hi = 0, outer_lo = 0, outer_hi = 0;
  double *suspected = nullptr, *extreme = nullptr;
  size_t n_suspected = 0, n_extreme = 0;
  REQUIRE(statkit_outliers(ds, "v", &inner_lo, &inner_hi, &outer_lo, &outer_hi,
                           &suspected, &n_suspected, &extreme,
                           &n_extreme) == STATKIT_OK);
  CHECK(inner_lo == -6.0);
  CHECK(inner_hi == 18.0);
  CHECK(outer_lo == -15.0);
  CHECK(outer_hi == 27.0);
  CHECK(n_suspected == 0);
  REQUIRE(n_extreme == 1);
  CHECK(extreme[0] == 100.0);
  statkit_buffer_free(suspected);
  statkit_buffer_free(extreme);

  // Fence-only calls skip the arrays.
  REQUIRE(statkit_outliers(ds, "v", &inner_lo, &inner_hi, &outer_lo, &outer_hi,
                           nullptr, nullptr, nullptr, nullptr) == STATKIT_OK);
  statkit_dataset_free(ds);
}

TEST_CASE("distribution functions obey basic identities") {
  double v = 0.0;
  REQUIRE(statkit_pdf(STATKIT_DIST_NORMAL, 0.0, 1.0, 0.0, &v) == STATKIT_OK);
  CHECK(v == doctest::Approx(0.3989422804014327).epsilon(1e-12));

  for (double q : {0.025, 0.5, 0.975}) {
    double x = 0.0, back = 0.0;
    REQUIRE(statkit_quantile(STATKIT_DIST_NORMAL, 3.0, 2.0, q, &x) == STATKIT_OK);
    REQUIRE(statkit_cdf(STATKIT_DIST_NORMAL, 3.0, 2.0, x, &back) == STATKIT_OK);
    CHECK(back == doctest::Approx(q).epsilon(1e-9));
  }

  double mean = 0.0, sd = 0.0;
  REQUIRE(statkit_moments(STATKIT_DIST_BINOMIAL, 20.0, 0.25, &mean, &sd) ==
          STATKIT_OK);
  CHECK(mean == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(sd == doctest::Approx(std::sqrt(20.0 * 0.25 * 0.75)).epsilon(1e-12));

  REQUIRE(statkit_cdf(STATKIT_DIST_BINOMIAL, 10.0, 0.5, 10.0, &v) == STATKIT_OK);
  CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

  double coverage[3] = {0, 0, 0};
  REQUIRE(statkit_empirical_rule(10.0, 2.0, coverage) == STATKIT_OK);
  for (int i = 0; i < 3; ++i) {
    double hi = 0.0, lo = 0.0;
    REQUIRE(statkit_cdf(STATKIT_DIST_NORMAL, 10.0, 2.0, 10.0 + 2.0 * (i + 1),
                        &hi) == STATKIT_OK);
    REQUIRE(statkit_cdf(STATKIT_DIST_NORMAL, 10.0, 2.0, 10.0 - 2.0 * (i + 1),
                        &lo) == STATKIT_OK);
    CHECK(coverage[i] == doctest::Approx(hi - lo).epsilon(1e-12));
  }
  CHECK(coverage[0] == doctest::Approx(0.6827).epsilon(1e-4));
  CHECK(coverage[1] == doctest::Approx(0.9545).epsilon(1e-4));
  CHECK(coverage[2] == doctest::Approx(0.9973).epsilon(1e-4));

  CHECK(statkit_pdf(STATKIT_DIST_NORMAL, 0.0, -1.0, 0.0, &v) ==
        STATKIT_ERR_INVALID_ARGUMENT);
  CHECK(statkit_quantile(STATKIT_DIST_NORMAL, 0.0, 1.0, 0.0, &v) ==
        STATKIT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sampling-distribution simulations are seeded and deterministic") {
  const double population[] = {0.0, 1.0};
  double mean1 = 0, sd1 = 0, skew1 = 0;
  REQUIRE(statkit_clt_population(population, 2, 50, 2000, 42, &mean1, &sd1,
                                 &skew1) == STATKIT_OK);
  CHECK(std::fabs(mean1 - 0.5) < 0.02);
  CHECK(sd1 == doctest::Approx(0.5 / std::sqrt(50.0)).epsilon(0.3));
  CHECK(std::fabs(skew1) < 0.5);

  double mean2 = 0, sd2 = 0, skew2 = 0;
  REQUIRE(statkit_clt_population(population, 2, 50, 2000, 42, &mean2, &sd2,
                                 &skew2) == STATKIT_OK);
  CHECK(mean1 == mean2);
  CHECK(sd1 == sd2);
  CHECK(skew1 == skew2);

  REQUIRE(statkit_clt_distribution(STATKIT_DIST_NORMAL, 0.0, 1.0, 10, 500, 1,
                                   &mean2, &sd2, &skew2) == STATKIT_OK);
  CHECK(std::fabs(mean2) < 0.05);
  CHECK(sd2 == doctest::Approx(1.0 / std::sqrt(10.0)).epsilon(0.3));

  CHECK(statkit_clt_distribution(STATKIT_DIST_CHI_SQUARE, 3.0, 0.0, 10, 100, 1,
                                 &mean2, &sd2, &skew2) ==
        STATKIT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("hypothesis tests and intervals flow through the C interface") {
  statkit_test_result r;

  const double flat[] = {5.1, 4.9, 5.0, 5.2, 4.8};
  REQUIRE(statkit_t_test_mean(flat, 5, 5.0, STATKIT_TAIL_TWO, 0.05, &r) ==
          STATKIT_OK);
  CHECK(std::string(r.name) == "t test for a mean");
  CHECK(std::string(r.df_label) == "df = 4");
  CHECK(std::string(r.reference) == "t(4)");
  CHECK(r.statistic == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(r.p_value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.reject == 0);
  CHECK(r.tail == STATKIT_TAIL_TWO);

  REQUIRE(statkit_z_test_mean(105.0, 25, 100.0, 10.0, STATKIT_TAIL_RIGHT, 0.05,
                              0, &r) == STATKIT_OK);
  CHECK(std::string(r.name) == "z test for a mean");
  CHECK(std::string(r.reference) == "N(0, 1)");
  CHECK(r.statistic == 2.5);
  CHECK(r.p_value == doctest::Approx(0.0062096653257761375).epsilon(1e-9));
  CHECK(r.reject == 1);

  REQUIRE(statkit_proportion_test(9, 10, 0.5, STATKIT_TAIL_TWO, 0.05, &r) ==
          STATKIT_OK);
  CHECK(std::string(r.name) == "proportion test (exact binomial)");
  CHECK(std::string(r.df_label) == "exact");
  CHECK(r.statistic == 9.0);
  CHECK(r.p_value == doctest::Approx(22.0 / 1024.0).epsilon(1e-10));
  CHECK(r.reject == 1);

  const double spread[] = {2, 4, 4, 4, 5, 5, 7, 9};
  REQUIRE(statkit_chi2_test_variance(spread, 8, 4.0, STATKIT_TAIL_TWO, 0.05,
                                     &r) == STATKIT_OK);
  CHECK(r.statistic == doctest::Approx(8.0).epsilon(1e-10));
  CHECK(std::string(r.df_label) == "df = 7");
  CHECK(r.reject == 0);

  const double a[] = {1, 2, 3, 4, 5};
  const double b[] = {2, 4, 6, 8, 10};
  statkit_test_result swapped;
  REQUIRE(statkit_f_test_variance_ratio(a, 5, b, 5, STATKIT_TAIL_TWO, 0.05,
                                        &r) == STATKIT_OK);
  REQUIRE(statkit_f_test_variance_ratio(b, 5, a, 5, STATKIT_TAIL_TWO, 0.05,
                                        &swapped) == STATKIT_OK);
  CHECK(r.statistic == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(swapped.statistic == doctest::Approx(4.0).epsilon(1e-12));
  // Reciprocal statistics with mirrored df give the same two-sided p.
  CHECK(r.p_value == doctest::Approx(swapped.p_value).epsilon(1e-10));

  double z975 = 0.0;
  REQUIRE(statkit_quantile(STATKIT_DIST_NORMAL, 0.0, 1.0, 0.975, &z975) ==
          STATKIT_OK);
  double lower = 0.0, upper = 0.0;
  REQUIRE(statkit_ci_mean_z(10.0, 25, 5.0, 0.95, &lower, &upper) == STATKIT_OK);
  CHECK(lower == doctest::Approx(10.0 - z975).epsilon(1e-12));
  CHECK(upper == doctest::Approx(10.0 + z975).epsilon(1e-12));

  REQUIRE(statkit_ci_mean_t(flat, 5, 0.95, &lower, &upper) == STATKIT_OK);
  CHECK((lower + upper) / 2.0 == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(lower < upper);

  REQUIRE(statkit_ci_proportion(40, 100, 0.95, &lower, &upper) == STATKIT_OK);
  CHECK((lower + upper) / 2.0 == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(upper - lower ==
        doctest::Approx(2.0 * z975 * std::sqrt(0.4 * 0.6 / 100.0))
            .epsilon(1e-10));

  CHECK(statkit_t_test_mean(flat, 1, 5.0, STATKIT_TAIL_TWO, 0.05, &r) ==
        STATKIT_ERR_INVALID_ARGUMENT);
  CHECK(statkit_t_test_mean(flat, 5, 5.0, STATKIT_TAIL_TWO, 0.0, &r) ==
        STATKIT_ERR_INVALID_ARGUMENT);
  CHECK(statkit_proportion_test(11, 10, 0.5, STATKIT_TAIL_TWO, 0.05, &r) ==
        STATKIT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("regression models fit, test and predict") {
  constexpr size_t n = 8;
  statkit_model* model = nullptr;
  REQUIRE(statkit_ols_fit(refvals::kSimpleRegressionX, n, 1,
                          refvals::kSimpleRegressionY, &model) == STATKIT_OK);

  double* coef = nullptr;
  size_t count = 0;
  REQUIRE(statkit_model_coefficients(model, &coef, &count) == STATKIT_OK);
  REQUIRE(count == 2);
  CHECK(coef[0] ==
        doctest::Approx(refvals::kSimpleRegressionIntercept).epsilon(1e-10));
  CHECK(coef[1] ==
        doctest::Approx(refvals::kSimpleRegressionSlope).epsilon(1e-10));

  statkit_anova an;
  REQUIRE(statkit_model_anova(model, &an) == STATKIT_OK);
  CHECK(an.dfm == 1);
  CHECK(an.dfe == n - 2);
  CHECK(an.sse == doctest::Approx(refvals::kSimpleRegressionSse).epsilon(1e-9));
  CHECK(an.sst == doctest::Approx(refvals::kSimpleRegressionSst).epsilon(1e-9));
  CHECK(an.f == doctest::Approx(refvals::kSimpleRegressionF).epsilon(1e-7));

  double r2 = 0.0;
  REQUIRE(statkit_model_r_squared(model, &r2) == STATKIT_OK);
  CHECK(r2 == doctest::Approx(refvals::kSimpleRegressionR2).epsilon(1e-10));

  double estimate = 0, se = 0, t = 0, p = 0;
  int defined = 0;
  REQUIRE(statkit_model_coefficient_test(model, 1, &estimate, &se, &t, &p,
                                         &defined) == STATKIT_OK);
  CHECK(defined == 1);
  CHECK(t == doctest::Approx(refvals::kSimpleRegressionSlopeT).epsilon(1e-8));
  CHECK(p == doctest::Approx(refvals::kSimpleRegressionSlopeP).epsilon(1e-6));
  CHECK(statkit_model_coefficient_test(model, 2, &estimate, &se, &t, &p,
                                       &defined) ==
        STATKIT_ERR_INVALID_ARGUMENT);

  const double x_new = 4.5;
  double predicted = 0.0;
  REQUIRE(statkit_model_predict(model, &x_new, 1, &predicted) == STATKIT_OK);
  CHECK(predicted == doctest::Approx(coef[0] + coef[1] * 4.5).epsilon(1e-12));
  statkit_buffer_free(coef);
  statkit_model_free(model);

  // An exact fit keeps the coefficients but disables their tests.
  const double xs[] = {1, 2, 3, 4, 5, 6};
  double ys[6];
  for (int i = 0; i < 6; ++i) ys[i] = 2.0 + 3.0 * xs[i];
  REQUIRE(statkit_ols_fit(xs, 6, 1, ys, &model) == STATKIT_OK);
  REQUIRE(statkit_model_anova(model, &an) == STATKIT_OK);
  CHECK(std::isinf(an.f));
  REQUIRE(statkit_model_r_squared(model, &r2) == STATKIT_OK);
  CHECK(r2 == 1.0);
  REQUIRE(statkit_model_coefficient_test(model, 1, &estimate, &se, &t, &p,
                                         &defined) == STATKIT_OK);
  CHECK(defined == 0);
  CHECK(estimate == doctest::Approx(3.0).epsilon(1e-10));
  statkit_model_free(model);

  CHECK(statkit_ols_fit(xs, 2, 1, ys, &model) == STATKIT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("factor analysis and reliability cross the boundary") {
  // Two noisy copies of a trend plus one contrast column.
  constexpr size_t n = 12, p = 3;
  const double data[n * p] = {
      1.0, 1.2, 5.0,  2.0, 1.8, 4.0,  3.0, 3.3, 6.0,  4.0, 4.1, 3.0,
      5.0, 4.8, 7.0,  6.0, 6.3, 2.0,  7.0, 6.9, 8.0,  8.0, 8.2, 1.0,
      9.0, 8.8, 9.0,  10.0, 10.3, 0.0, 11.0, 10.9, 10.0, 12.0, 12.1, -1.0};

  statkit_efa* efa = nullptr;
  REQUIRE(statkit_efa_run(data, n, p, 1, STATKIT_EXTRACT_PCA,
                          STATKIT_ROTATE_NONE, &efa) == STATKIT_OK);

  size_t m = 0;
  REQUIRE(statkit_efa_factor_count(efa, &m) == STATKIT_OK);
  CHECK(m == 1);

  double* loadings = nullptr;
  size_t lp = 0, lm = 0;
  REQUIRE(statkit_efa_loadings(efa, &loadings, &lp, &lm) == STATKIT_OK);
  CHECK(lp == p);
  CHECK(lm == 1);

  double* communalities = nullptr;
  size_t count = 0;
  REQUIRE(statkit_efa_communalities(efa, &communalities, &count) == STATKIT_OK);
  REQUIRE(count == p);
  for (size_t i = 0; i < p; ++i)
    CHECK(communalities[i] ==
          doctest::Approx(loadings[i] * loadings[i]).epsilon(1e-12));
  statkit_buffer_free(loadings);
  statkit_buffer_free(communalities);

  double* eigenvalues = nullptr;
  REQUIRE(statkit_efa_eigenvalues(efa, &eigenvalues, &count) == STATKIT_OK);
  REQUIRE(count == p);
  double sum = 0.0;
  for (size_t i = 0; i < p; ++i) {
    sum += eigenvalues[i];
    if (i) CHECK(eigenvalues[i] <= eigenvalues[i - 1] + 1e-12);
  }
  CHECK(sum == doctest::Approx(static_cast<double>(p)).epsilon(1e-9));
  statkit_buffer_free(eigenvalues);

  double statistic = 0, p_value = 0;
  size_t df = 0;
  REQUIRE(statkit_efa_bartlett(efa, &statistic, &df, &p_value) == STATKIT_OK);
  CHECK(df == p * (p - 1) / 2);
  CHECK(statistic > 0.0);
  CHECK((p_value >= 0.0 && p_value <= 1.0));

  double overall = 0.0;
  char* band = nullptr;
  REQUIRE(statkit_efa_kmo(efa, &overall, &band) == STATKIT_OK);
  CHECK((overall >= 0.0 && overall <= 1.0));
  CHECK(take_string(band) != "");

  size_t warning_count = 0;
  REQUIRE(statkit_efa_warning_count(efa, &warning_count) == STATKIT_OK);
  char* text = nullptr;
  CHECK(statkit_efa_warning(efa, warning_count, &text) ==
        STATKIT_ERR_INVALID_ARGUMENT);
  statkit_efa_free(efa);

  CHECK(statkit_efa_run(data, n, p, p, STATKIT_EXTRACT_PCA, STATKIT_ROTATE_NONE,
                        &efa) == STATKIT_ERR_INVALID_ARGUMENT);

  // Two identical items are perfectly consistent.
  const double items[] = {1, 1, 2, 2, 3, 3, 4, 4};
  double alpha = 0.0;
  REQUIRE(statkit_cronbach(items, 4, 2, &alpha, &band) == STATKIT_OK);
  CHECK(alpha == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(take_string(band) == "excellent");
}

TEST_CASE("clustering crosses the boundary intact") {
  const double points[] = {0.0, 1.0, 10.0, 11.0};

  statkit_dendrogram* dg = nullptr;
  REQUIRE(statkit_hierarchical_points(points, 4, 1, STATKIT_LINKAGE_SINGLE,
                                      &dg) == STATKIT_OK);
  size_t leaves = 0;
  REQUIRE(statkit_dendrogram_leaves(dg, &leaves) == STATKIT_OK);
  CHECK(leaves == 4);

  size_t a = 0, b = 0, size = 0;
  double height = 0.0;
  REQUIRE(statkit_dendrogram_step(dg, 0, &a, &b, &height, &size) == STATKIT_OK);
  CHECK(a == 0);
  CHECK(b == 1);
  CHECK(height == 1.0);
  CHECK(size == 2);
  REQUIRE(statkit_dendrogram_step(dg, 2, &a, &b, &height, &size) == STATKIT_OK);
  CHECK(a == 4);
  CHECK(b == 5);
  CHECK(height == 9.0);
  CHECK(size == 4);
  REQUIRE(statkit_dendrogram_step(dg, 1, nullptr, nullptr, nullptr, nullptr) ==
          STATKIT_OK);
  CHECK(statkit_dendrogram_step(dg, 3, &a, &b, &height, &size) ==
        STATKIT_ERR_INVALID_ARGUMENT);

  size_t labels[4] = {9, 9, 9, 9};
  REQUIRE(statkit_dendrogram_cut(dg, 2, labels) == STATKIT_OK);
  CHECK(labels[0] == 0);
  CHECK(labels[1] == 0);
  CHECK(labels[2] == 1);
  CHECK(labels[3] == 1);
  CHECK(statkit_dendrogram_cut(dg, 5, labels) == STATKIT_ERR_INVALID_ARGUMENT);
  statkit_dendrogram_free(dg);

  const double diss[] = {0, 1, 4, 1, 0, 2, 4, 2, 0};
  REQUIRE(statkit_hierarchical_matrix(diss, 3, STATKIT_LINKAGE_SINGLE, &dg) ==
          STATKIT_OK);
  REQUIRE(statkit_dendrogram_step(dg, 1, &a, &b, &height, &size) == STATKIT_OK);
  CHECK(a == 2);
  CHECK(b == 3);
  CHECK(height == 2.0);
  CHECK(size == 3);
  statkit_dendrogram_free(dg);
  CHECK(statkit_hierarchical_matrix(diss, 3, STATKIT_LINKAGE_WARD, &dg) ==
        STATKIT_ERR_INVALID_ARGUMENT);

  size_t assignment[4] = {9, 9, 9, 9};
  double centroids[2] = {0, 0};
  double wss = -1.0;
  size_t iterations = 0;
  int converged = 0;
  REQUIRE(statkit_kmeans(points, 4, 1, 2, STATKIT_KMEANS_FARTHEST_FIRST, 0, 100,
                         assignment, centroids, &wss, &iterations,
                         &converged) == STATKIT_OK);
  CHECK(assignment[0] == 0);
  CHECK(assignment[1] == 0);
  CHECK(assignment[2] == 1);
  CHECK(assignment[3] == 1);
  CHECK(centroids[0] == 0.5);
  CHECK(centroids[1] == 10.5);
  CHECK(wss == 1.0);
  CHECK(converged == 1);
  CHECK(iterations >= 1);
  CHECK(statkit_kmeans(points, 4, 1, 0, STATKIT_KMEANS_FARTHEST_FIRST, 0, 100,
                       assignment, centroids, &wss, &iterations, &converged) ==
        STATKIT_ERR_INVALID_ARGUMENT);
  CHECK(statkit_kmeans(points, 4, 1, 5, STATKIT_KMEANS_FARTHEST_FIRST, 0, 100,
                       assignment, centroids, &wss, &iterations, &converged) ==
        STATKIT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("classification crosses the boundary intact") {
  statkit_dataset* ds = nullptr;
  REQUIRE(statkit_dataset_parse_csv(
              "color,cls\nred,a\nred,a\nblue,b\nblue,b\ngreen,a\n", nullptr,
              &ds) == STATKIT_OK);

  statkit_oner* rule = nullptr;
  REQUIRE(statkit_oner_train(ds, "cls", 4, &rule) == STATKIT_OK);
  char* text = nullptr;
  REQUIRE(statkit_oner_attribute(rule, &text) == STATKIT_OK);
  CHECK(take_string(text) == "color");
  REQUIRE(statkit_oner_default_class(rule, &text) == STATKIT_OK);
  CHECK(take_string(text) == "a");
  double error = 1.0;
  REQUIRE(statkit_oner_training_error(rule, &error) == STATKIT_OK);
  CHECK(error == 0.0);

  int used_default = -1;
  REQUIRE(statkit_oner_predict_label(rule, "blue", &text, &used_default) ==
          STATKIT_OK);
  CHECK(take_string(text) == "b");
  CHECK(used_default == 0);
  REQUIRE(statkit_oner_predict_label(rule, "purple", &text, &used_default) ==
          STATKIT_OK);
  CHECK(take_string(text) == "a");
  CHECK(used_default == 1);
  CHECK(statkit_oner_predict_number(rule, 1.0, &text, &used_default) ==
        STATKIT_ERR_INVALID_ARGUMENT);
  statkit_oner_free(rule);
  statkit_dataset_free(ds);

  REQUIRE(statkit_dataset_parse_csv("v,cls\n1,a\n2,a\n3,b\n4,b\n", nullptr,
                                    &ds) == STATKIT_OK);
  REQUIRE(statkit_oner_train(ds, "cls", 2, &rule) == STATKIT_OK);
  REQUIRE(statkit_oner_predict_number(rule, 2.5, &text, &used_default) ==
          STATKIT_OK);
  CHECK(take_string(text) == "a");
  REQUIRE(statkit_oner_predict_number(rule, 2.6, &text, &used_default) ==
          STATKIT_OK);
  CHECK(take_string(text) == "b");
  CHECK(statkit_oner_predict_label(rule, "1", &text, &used_default) ==
        STATKIT_ERR_INVALID_ARGUMENT);
  statkit_oner_free(rule);
  statkit_dataset_free(ds);

  REQUIRE(statkit_dataset_parse_csv(
              "x,y,cls\n0,0,a\n0,1,a\n5,5,b\n5,6,b\n", nullptr, &ds) ==
          STATKIT_OK);
  const double query[] = {0.0, 0.6};
  REQUIRE(statkit_knn_predict(ds, "cls", query, 2, 3,
                              STATKIT_DISTANCE_EUCLIDEAN, 0.0, &text) ==
          STATKIT_OK);
  CHECK(take_string(text) == "a");
  REQUIRE(statkit_knn_predict(ds, "cls", query, 2, 1,
                              STATKIT_DISTANCE_MINKOWSKI, 1.0, &text) ==
          STATKIT_OK);
  CHECK(take_string(text) == "a");
  CHECK(statkit_knn_predict(ds, "cls", query, 1, 1, STATKIT_DISTANCE_EUCLIDEAN,
                            0.0, &text) == STATKIT_ERR_INVALID_ARGUMENT);
  CHECK(statkit_knn_predict(ds, "cls", query, 2, 0, STATKIT_DISTANCE_EUCLIDEAN,
                            0.0, &text) == STATKIT_ERR_INVALID_ARGUMENT);
  statkit_dataset_free(ds);
}

TEST_CASE("config execution and csv profiles work end to end") {
  testsupport::TempDir dir;
  const std::string csv = dir.write("colors.csv",
                                    "color\nBlue\nRed\nBlue\nWhite\nGreen\n"
                                    "White\nBlue\nRed\nBlue\nBlack\n");
  const std::string out_dir = (dir.path() / "out").string();
  const std::string cfg = dir.write("pipe.cfg",
                                    "input = " + csv + "\noutput = " + out_dir +
                                        "\n\n[frequencies]\ncolumn = color\n"
                                        "chart = pie\n");

  char* report_path = nullptr;
  REQUIRE(statkit_run_config(cfg.c_str(), nullptr, &report_path) == STATKIT_OK);
  const std::string path = take_string(report_path);
  const std::string report = testsupport::read_file(path);
  CHECK(report.find("# statkit report") != std::string::npos);
  CHECK(report.find("| Blue | 4 | 4 | 0.4 | 0.4 |") != std::string::npos);
  CHECK(testsupport::read_file(
            (std::filesystem::path(out_dir) / "charts" / "01-pie.json")
                .string())
            .find("\"kind\": \"pie\"") != std::string::npos);

  const std::string override_dir = (dir.path() / "other").string();
  REQUIRE(statkit_run_config(cfg.c_str(), override_dir.c_str(), &report_path) ==
          STATKIT_OK);
  CHECK(take_string(report_path).rfind(override_dir, 0) == 0);

  CHECK(statkit_run_config((dir.path() / "gone.cfg").c_str(), nullptr,
                           &report_path) == STATKIT_ERR_IO);
  CHECK(statkit_run_config(nullptr, nullptr, &report_path) ==
        STATKIT_ERR_INVALID_ARGUMENT);

  char* profile = nullptr;
  REQUIRE(statkit_describe_csv(csv.c_str(), nullptr, nullptr, &profile) ==
          STATKIT_OK);
  CHECK(take_string(profile).find("rows: 10") != std::string::npos);
  REQUIRE(statkit_describe_csv(csv.c_str(), nullptr, "color", &profile) ==
          STATKIT_OK);
  CHECK(take_string(profile).find("Blue: 4 (0.4)") != std::string::npos);
  CHECK(statkit_describe_csv(csv.c_str(), nullptr, "nope", &profile) ==
        STATKIT_ERR_DATA);
}

/* Copyright 2026 The statkit authors */
/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C interface of the statkit shared library.
 *
 * Every fallible function returns a statkit_status; on failure a
 * human-readable message is available from statkit_last_error() until
 * the same thread makes the next statkit call. Strings returned
 * through char** are heap copies owned by the caller: release them
 * with statkit_string_free. Numeric arrays returned through double**
 * or size_t** are released with statkit_buffer_free.
 */

#ifndef STATKIT_H_
#define STATKIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(STATKIT_BUILD)
#define STATKIT_API __declspec(dllexport)
#else
#define STATKIT_API __declspec(dllimport)
#endif
#else
#define STATKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum statkit_status {
  STATKIT_OK = 0,
  STATKIT_ERR_INVALID_ARGUMENT = 1, /* caller broke a precondition    */
  STATKIT_ERR_CONFIG = 2,           /* malformed configuration        */
  STATKIT_ERR_DATA = 3,             /* the data cannot support the op */
  STATKIT_ERR_NUMERIC = 4,          /* numerical failure              */
  STATKIT_ERR_IO = 5,               /* file system failure            */
  STATKIT_ERR_INTERNAL = 6          /* unexpected internal failure    */
} statkit_status;

/* Library version, e.g. "0.1.0". Static storage; do not free. */
STATKIT_API const char* statkit_version(void);

/* Message of this thread's most recent failure ("" after success).
 * Valid until the next statkit call on the same thread; do not free. */
STATKIT_API const char* statkit_last_error(void);

STATKIT_API void statkit_string_free(char* s);
STATKIT_API void statkit_buffer_free(void* p);

/* ---------------------------------------------------------------- */
/* Datasets                                                          */
/* ---------------------------------------------------------------- */

typedef struct statkit_dataset statkit_dataset;

/* schema: optional per-column kind overrides in the compact form
 * "col=kind;col=ordinal(a<b<c)" with kinds nominal, ordinal, discrete
 * and continuous. Pass NULL or "" to infer every kind. */
STATKIT_API statkit_status statkit_dataset_load_csv(const char* path,
                                                    const char* schema,
                                                    statkit_dataset** out);
STATKIT_API statkit_status statkit_dataset_parse_csv(const char* text,
                                                     const char* schema,
                                                     statkit_dataset** out);
STATKIT_API void statkit_dataset_free(statkit_dataset* dataset);

STATKIT_API statkit_status statkit_dataset_rows(const statkit_dataset* dataset,
                                                size_t* out);
STATKIT_API statkit_status statkit_dataset_columns(const statkit_dataset* dataset,
                                                   size_t* out);
STATKIT_API statkit_status statkit_dataset_column_name(const statkit_dataset* dataset,
                                                       size_t index, char** out);
/* Kind name: "nominal", "ordinal", "discrete" or "continuous". */
STATKIT_API statkit_status statkit_dataset_column_kind(const statkit_dataset* dataset,
                                                       const char* column,
                                                       char** out);

/* ---------------------------------------------------------------- */
/* Descriptive statistics                                            */
/* ---------------------------------------------------------------- */

typedef struct statkit_summary_stats {
  size_t n;
  double mean;
  double median;
  double variance_sample;
  double variance_population;
  double sd_sample;
  double sd_population;
  double min;
  double max;
  double range;
  double q1;
  double q3;
  double iqr;
} statkit_summary_stats;

/* Numeric column with at least 2 observed values. */
STATKIT_API statkit_status statkit_summary(const statkit_dataset* dataset,
                                           const char* column,
                                           statkit_summary_stats* out);

/* Most frequent values in ascending order; empty when every distinct
 * value is equally common. */
STATKIT_API statkit_status statkit_modes(const statkit_dataset* dataset,
                                         const char* column, double** out,
                                         size_t* count);

/* Percentile by the rank rule: with i = n*p/100 integral, the average
 * of the i-th and (i+1)-th ordered values; otherwise the ceil(i)-th. */
STATKIT_API statkit_status statkit_percentile(const statkit_dataset* dataset,
                                              const char* column, double p,
                                              double* out);

/* 1.5x/3x IQR fences and the values beyond them. Needs n >= 4. Array
 * outputs may be NULL when only the fences are wanted. */
STATKIT_API statkit_status statkit_outliers(const statkit_dataset* dataset,
                                            const char* column, double* inner_lo,
                                            double* inner_hi, double* outer_lo,
                                            double* outer_hi, double** suspected,
                                            size_t* suspected_count,
                                            double** extreme,
                                            size_t* extreme_count);

/* ---------------------------------------------------------------- */
/* Distributions                                                     */
/* ---------------------------------------------------------------- */

typedef enum statkit_family {
  STATKIT_DIST_NORMAL = 0,     /* a = mean, b = sd > 0          */
  STATKIT_DIST_CHI_SQUARE = 1, /* a = df > 0                    */
  STATKIT_DIST_STUDENT_T = 2,  /* a = df > 0                    */
  STATKIT_DIST_FISHER_F = 3,   /* a = df1 > 0, b = df2 > 0      */
  STATKIT_DIST_BINOMIAL = 4    /* a = trials >= 1, b = p in [0,1] */
} statkit_family;

STATKIT_API statkit_status statkit_pdf(statkit_family family, double a, double b,
                                       double x, double* out);
STATKIT_API statkit_status statkit_cdf(statkit_family family, double a, double b,
                                       double x, double* out);
/* q in (0, 1). Continuous families invert the CDF numerically; the
 * binomial returns the smallest k with CDF(k) >= q. */
STATKIT_API statkit_status statkit_quantile(statkit_family family, double a,
                                            double b, double q, double* out);
STATKIT_API statkit_status statkit_moments(statkit_family family, double a,
                                           double b, double* mean_out,
                                           double* sd_out);

/* Normal coverage of mean +/- 1, 2, 3 standard deviations. */
STATKIT_API statkit_status statkit_empirical_rule(double mean, double sd,
                                                  double coverage_out[3]);

/* Sampling distribution of the mean: draw `replications` samples of
 * size n, return the mean, standard deviation and standardized
 * skewness of the sample means. */
STATKIT_API statkit_status statkit_clt_population(const double* population,
                                                  size_t length, size_t n,
                                                  size_t replications,
                                                  uint64_t seed, double* mean_out,
                                                  double* sd_out, double* skew_out);
/* Family must be normal or binomial. */
STATKIT_API statkit_status statkit_clt_distribution(statkit_family family, double a,
                                                    double b, size_t n,
                                                    size_t replications,
                                                    uint64_t seed, double* mean_out,
                                                    double* sd_out,
                                                    double* skew_out);

/* ---------------------------------------------------------------- */
/* Hypothesis tests and confidence intervals                         */
/* ---------------------------------------------------------------- */

typedef enum statkit_tail {
  STATKIT_TAIL_LEFT = 0,
  STATKIT_TAIL_RIGHT = 1,
  STATKIT_TAIL_TWO = 2
} statkit_tail;

typedef struct statkit_test_result {
  char name[64];       /* e.g. "t test for a mean"             */
  double statistic;
  char reference[48];  /* null distribution, e.g. "t(19)"      */
  char df_label[32];   /* e.g. "df = n-1", "exact"             */
  int tail;            /* statkit_tail                         */
  double p_value;
  double alpha;
  int reject;          /* 1 iff p_value < alpha                */
} statkit_test_result;

/* Known-sigma z test. population_size 0 means an infinite population;
 * otherwise the finite-population correction applies (requires
 * population_size > n). */
STATKIT_API statkit_status statkit_z_test_mean(double xbar, size_t n, double mu0,
                                               double sigma, statkit_tail tail,
                                               double alpha, size_t population_size,
                                               statkit_test_result* out);
STATKIT_API statkit_status statkit_t_test_mean(const double* sample, size_t n,
                                               double mu0, statkit_tail tail,
                                               double alpha,
                                               statkit_test_result* out);
/* sigma0_sq is the hypothesized population variance. */
STATKIT_API statkit_status statkit_chi2_test_variance(const double* sample, size_t n,
                                                      double sigma0_sq,
                                                      statkit_tail tail, double alpha,
                                                      statkit_test_result* out);
STATKIT_API statkit_status statkit_f_test_variance_ratio(
    const double* a, size_t n_a, const double* b, size_t n_b, statkit_tail tail,
    double alpha, statkit_test_result* out);
/* Uses the normal approximation for large samples with an interior
 * p-hat, the exact binomial tail otherwise. */
STATKIT_API statkit_status statkit_proportion_test(size_t successes, size_t trials,
                                                   double p0, statkit_tail tail,
                                                   double alpha,
                                                   statkit_test_result* out);

STATKIT_API statkit_status statkit_ci_mean_z(double xbar, size_t n, double sigma,
                                             double level, double* lower,
                                             double* upper);
STATKIT_API statkit_status statkit_ci_mean_t(const double* sample, size_t n,
                                             double level, double* lower,
                                             double* upper);
STATKIT_API statkit_status statkit_ci_proportion(size_t successes, size_t trials,
                                                 double level, double* lower,
                                                 double* upper);

/* ---------------------------------------------------------------- */
/* Linear regression                                                 */
/* ---------------------------------------------------------------- */

typedef struct statkit_model statkit_model;

typedef struct statkit_anova {
  double sst, ssm, sse;
  size_t dfm, dfe;
  double msm, mse;
  double f;       /* +inf on an exact fit */
  double p_value;
} statkit_anova;

/* x is row-major n x p (predictors only; the intercept is added
 * internally). Requires n >= p + 2 and a full-rank design. */
STATKIT_API statkit_status statkit_ols_fit(const double* x, size_t n, size_t p,
                                           const double* y, statkit_model** out);
STATKIT_API void statkit_model_free(statkit_model* model);

/* Intercept-first coefficient vector of length p + 1. */
STATKIT_API statkit_status statkit_model_coefficients(const statkit_model* model,
                                                      double** out, size_t* count);
STATKIT_API statkit_status statkit_model_anova(const statkit_model* model,
                                               statkit_anova* out);
/* Two-tailed t test of coefficient `index` (0 = intercept) against 0.
 * defined is 0 on an exact fit, where the tests carry no information. */
STATKIT_API statkit_status statkit_model_coefficient_test(
    const statkit_model* model, size_t index, double* estimate, double* se,
    double* t, double* p_value, int* defined);
STATKIT_API statkit_status statkit_model_r_squared(const statkit_model* model,
                                                   double* out);
STATKIT_API statkit_status statkit_model_predict(const statkit_model* model,
                                                 const double* x_new, size_t p,
                                                 double* out);

/* ---------------------------------------------------------------- */
/* Factor analysis                                                   */
/* ---------------------------------------------------------------- */

typedef struct statkit_efa statkit_efa;

typedef enum statkit_extraction {
  STATKIT_EXTRACT_PCA = 0,
  STATKIT_EXTRACT_PRINCIPAL_AXIS = 1
} statkit_extraction;

typedef enum statkit_rotation {
  STATKIT_ROTATE_NONE = 0,
  STATKIT_ROTATE_VARIMAX = 1,
  STATKIT_ROTATE_QUARTIMAX = 2
} statkit_rotation;

/* data is row-major n x p raw observations (n >= 3, p >= 2). factors
 * = 0 retains by the eigenvalue > 1 rule, otherwise the stated count
 * (1 <= factors < p). */
STATKIT_API statkit_status statkit_efa_run(const double* data, size_t n, size_t p,
                                           size_t factors,
                                           statkit_extraction extraction,
                                           statkit_rotation rotation,
                                           statkit_efa** out);
STATKIT_API void statkit_efa_free(statkit_efa* efa);

STATKIT_API statkit_status statkit_efa_factor_count(const statkit_efa* efa,
                                                    size_t* out);
/* Row-major p x m loading matrix. */
STATKIT_API statkit_status statkit_efa_loadings(const statkit_efa* efa, double** out,
                                                size_t* p, size_t* m);
STATKIT_API statkit_status statkit_efa_communalities(const statkit_efa* efa,
                                                     double** out, size_t* count);
/* All p eigenvalues of the correlation matrix, descending. */
STATKIT_API statkit_status statkit_efa_eigenvalues(const statkit_efa* efa,
                                                   double** out, size_t* count);
STATKIT_API statkit_status statkit_efa_bartlett(const statkit_efa* efa,
                                                double* statistic, size_t* df,
                                                double* p_value);
STATKIT_API statkit_status statkit_efa_kmo(const statkit_efa* efa, double* overall,
                                           char** band);
STATKIT_API statkit_status statkit_efa_warning_count(const statkit_efa* efa,
                                                     size_t* out);
STATKIT_API statkit_status statkit_efa_warning(const statkit_efa* efa, size_t index,
                                               char** out);

/* Internal consistency of a row-major n x k item battery. */
STATKIT_API statkit_status statkit_cronbach(const double* items, size_t n, size_t k,
                                            double* alpha, char** band);

/* ---------------------------------------------------------------- */
/* Clustering                                                        */
/* ---------------------------------------------------------------- */

typedef enum statkit_linkage {
  STATKIT_LINKAGE_SINGLE = 0,
  STATKIT_LINKAGE_COMPLETE = 1,
  STATKIT_LINKAGE_AVERAGE_BETWEEN = 2,
  STATKIT_LINKAGE_AVERAGE_WITHIN = 3,
  STATKIT_LINKAGE_CENTROID = 4,
  STATKIT_LINKAGE_WARD = 5
} statkit_linkage;

typedef enum statkit_distance_kind {
  STATKIT_DISTANCE_EUCLIDEAN = 0,
  STATKIT_DISTANCE_MINKOWSKI = 1, /* order c >= 1 */
  STATKIT_DISTANCE_COSINE = 2,
  STATKIT_DISTANCE_JACCARD = 3
} statkit_distance_kind;

typedef struct statkit_dendrogram statkit_dendrogram;

/* Agglomerates the rows of the n x dim point matrix under Euclidean
 * geometry. */
STATKIT_API statkit_status statkit_hierarchical_points(const double* points,
                                                       size_t n, size_t dim,
                                                       statkit_linkage linkage,
                                                       statkit_dendrogram** out);
/* Agglomerates a symmetric n x n dissimilarity matrix. Centroid and
 * Ward linkage are rejected here: they need raw coordinates. */
STATKIT_API statkit_status statkit_hierarchical_matrix(const double* dissimilarity,
                                                       size_t n,
                                                       statkit_linkage linkage,
                                                       statkit_dendrogram** out);
STATKIT_API void statkit_dendrogram_free(statkit_dendrogram* dendrogram);

STATKIT_API statkit_status statkit_dendrogram_leaves(
    const statkit_dendrogram* dendrogram, size_t* out);
/* Merge `step` (0-based): cluster ids a < b (leaves are 0..n-1, the
 * step-th merge creates id n + step), the merge height, and the new
 * cluster's size. Output pointers may be NULL. */
STATKIT_API statkit_status statkit_dendrogram_step(
    const statkit_dendrogram* dendrogram, size_t step, size_t* a, size_t* b,
    double* height, size_t* size);
/* labels must hold `leaves` entries; cluster labels are numbered by
 * each cluster's smallest member index. */
STATKIT_API statkit_status statkit_dendrogram_cut(
    const statkit_dendrogram* dendrogram, size_t k, size_t* labels);

typedef enum statkit_kmeans_init {
  STATKIT_KMEANS_FARTHEST_FIRST = 0,
  STATKIT_KMEANS_SEEDED_RANDOM = 1
} statkit_kmeans_init;

/* Lloyd iterations over the n x dim points. assignment must hold n
 * entries and centroids k*dim entries; wss, iterations and converged
 * may be NULL. */
STATKIT_API statkit_status statkit_kmeans(const double* points, size_t n, size_t dim,
                                          size_t k, statkit_kmeans_init init,
                                          uint64_t seed, size_t max_iter,
                                          size_t* assignment, double* centroids,
                                          double* wss, size_t* iterations,
                                          int* converged);

/* ---------------------------------------------------------------- */
/* Classification                                                    */
/* ---------------------------------------------------------------- */

typedef struct statkit_oner statkit_oner;

/* Trains a one-attribute rule on the dataset with the given nominal
 * or ordinal class column; numeric attributes are discretized into at
 * most `bins` equal-frequency bins. */
STATKIT_API statkit_status statkit_oner_train(const statkit_dataset* dataset,
                                              const char* class_column, size_t bins,
                                              statkit_oner** out);
STATKIT_API void statkit_oner_free(statkit_oner* oner);

STATKIT_API statkit_status statkit_oner_attribute(const statkit_oner* oner,
                                                  char** out);
STATKIT_API statkit_status statkit_oner_default_class(const statkit_oner* oner,
                                                      char** out);
STATKIT_API statkit_status statkit_oner_training_error(const statkit_oner* oner,
                                                       double* out);
/* Predicts from a categorical attribute value; unseen values fall back
 * to the default class with *used_default = 1. */
STATKIT_API statkit_status statkit_oner_predict_label(const statkit_oner* oner,
                                                      const char* value,
                                                      char** out_class,
                                                      int* used_default);
/* Predicts from a numeric attribute value via the trained cut points. */
STATKIT_API statkit_status statkit_oner_predict_number(const statkit_oner* oner,
                                                       double value,
                                                       char** out_class,
                                                       int* used_default);

/* Majority vote among the k nearest training rows. The query lists the
 * non-class columns in dataset order; all of them must be numeric. */
STATKIT_API statkit_status statkit_knn_predict(const statkit_dataset* dataset,
                                               const char* class_column,
                                               const double* query, size_t dim,
                                               size_t k,
                                               statkit_distance_kind distance,
                                               double minkowski_c, char** out_class);

/* ---------------------------------------------------------------- */
/* Report pipeline                                                   */
/* ---------------------------------------------------------------- */

/* Executes the config file: loads the input CSV, runs each [section]
 * in order and writes report.md plus charts/*.json under the output
 * directory. output_override replaces the configured output directory
 * when non-NULL. The STATKIT_SEED environment variable overrides the
 * configured seed. On success *report_path (when non-NULL) receives
 * the path of the written report. */
STATKIT_API statkit_status statkit_run_config(const char* config_path,
                                              const char* output_override,
                                              char** report_path);

/* Plain-text profile of a CSV file; column may be NULL for the whole
 * dataset and schema may be NULL for inferred kinds. */
STATKIT_API statkit_status statkit_describe_csv(const char* path, const char* schema,
                                                const char* column, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STATKIT_H_ */

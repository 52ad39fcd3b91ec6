// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/linalg.hpp"

namespace statkit {

struct CorrelationMatrix {
  Matrix r;           // p x p, symmetric, unit diagonal
  std::size_t n = 0;  // sample size it came from
};

// Pearson correlations of the columns of data (n x p). Needs n >= 3
// and a nonzero deviation in every column.
CorrelationMatrix correlation_matrix(const Matrix& data);

struct BartlettResult {
  double statistic = 0.0;
  std::size_t df = 0;     // p(p-1)/2
  double p_value = 1.0;
};

// Sphericity test: statistic -(n - 1 - (2p + 5)/6) ln|R| against
// chi-square(p(p-1)/2). |R| <= 1e-12 is treated as singular.
BartlettResult bartlett_sphericity(const CorrelationMatrix& r);

struct KmoResult {
  double overall = 0.0;
  std::vector<double> per_variable;
  std::string band;  // sampling-adequacy verdict
};

// Sampling adequacy from the anti-image correlations a_ij =
// -v_ij / sqrt(v_ii v_jj), V = R^-1.
KmoResult kmo(const CorrelationMatrix& r);

// Verdict bands for a KMO value: unacceptable, miserable, mediocre,
// middling, meritorious, marvelous.
const char* kmo_band(double value);

struct EigenPairs {
  std::vector<double> values;  // descending
  Matrix vectors;              // matching unit eigenvectors as columns
};

// Full spectrum of a symmetric matrix (cyclic Jacobi). Rejects
// non-symmetric input.
EigenPairs eigen_symmetric(const Matrix& a);

struct FactorSolution {
  Matrix loadings;                      // p x m
  std::vector<double> communalities;    // h2, row sums of squared loadings
  std::vector<double> specific_variances;  // 1 - h2
  std::vector<double> eigenvalues;      // the m eigenvalues used
  std::vector<double> explained_shares; // per-factor share of total variance
  std::string extraction;               // "pca" | "principal-axis"
  std::string rotation;                 // "none" | "varimax" | "quartimax"
  Matrix rotation_matrix;               // m x m orthogonal map set by rotate()
  std::vector<std::string> warnings;
};

// Principal-component extraction: loadings v_j * sqrt(lambda_j) from
// the top m eigenpairs of R.
FactorSolution extract_pca(const CorrelationMatrix& r, std::size_t m);

// Principal-axis extraction: iterate communalities on the diagonal,
// starting from squared multiple correlations, until the largest
// change is at most tol. Communalities above 1 clamp with a warning.
FactorSolution extract_principal_axis(const CorrelationMatrix& r, std::size_t m,
                                      std::size_t max_iter = 200, double tol = 1e-6);

enum class RetentionRule { Kaiser, VarianceExplained, All };

// Factor count under the chosen rule; never less than 1. A Kaiser
// count of zero is raised to 1 with a warning appended.
std::size_t retain(const std::vector<double>& eigenvalues, RetentionRule rule,
                   double threshold, std::vector<std::string>* warnings);

// Descending (1-based index, eigenvalue) pairs for chart emission.
std::vector<std::pair<std::size_t, double>> scree_data(
    const std::vector<double>& eigenvalues);

enum class RotationKind { Varimax, Quartimax };

// Orthogonal rotation maximizing the orthomax criterion (gamma = 1 for
// varimax, 0 for quartimax) via pairwise planar rotations. Kaiser row
// normalization is on by default. Communalities are preserved. With
// one factor the solution is returned unchanged.
FactorSolution rotate(const FactorSolution& solution, RotationKind kind,
                      bool kaiser_normalize = true);

struct CronbachResult {
  double alpha = 0.0;
  std::string band;
};

// Internal-consistency coefficient over item columns (n x k):
// (k/(k-1)) (1 - sum of item variances / variance of row totals).
CronbachResult cronbach_alpha(const Matrix& items);

// Verdict bands: unacceptable, poor, questionable, acceptable, good,
// excellent.
const char* cronbach_band(double alpha);

}  // namespace statkit

// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#include "core/factor.hpp"

#include <algorithm>
#include <cmath>

#include "core/descriptive.hpp"
#include "core/distributions.hpp"
#include "core/errors.hpp"
#include "core/inference.hpp"

namespace statkit {

CorrelationMatrix correlation_matrix(const Matrix& data) {
  const std::size_t n = data.rows();
  const std::size_t p = data.cols();
  if (n < 3) fail(ErrorCode::InvalidArgument, "correlations need n >= 3 rows");
  if (p < 1) fail(ErrorCode::InvalidArgument, "correlations need at least one column");

  std::vector<double> means(p, 0.0), ss(p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    const std::vector<double> col = data.column(j);
    means[j] = mean(col);
    double s2 = 0.0;
    for (double v : col) s2 += (v - means[j]) * (v - means[j]);
    ss[j] = s2;
    if (!(s2 > 0.0))
      fail(ErrorCode::Data, "column " + std::to_string(j) + " is constant; correlation undefined");
  }

  CorrelationMatrix out;
  out.n = n;
  out.r = Matrix(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    out.r(i, i) = 1.0;
    for (std::size_t j = i + 1; j < p; ++j) {
      double s = 0.0;
      for (std::size_t row = 0; row < n; ++row)
        s += (data(row, i) - means[i]) * (data(row, j) - means[j]);
      double r = s / std::sqrt(ss[i] * ss[j]);
      r = std::min(1.0, std::max(-1.0, r));
      out.r(i, j) = r;
      out.r(j, i) = r;
    }
  }
  return out;
}

BartlettResult bartlett_sphericity(const CorrelationMatrix& r) {
  const std::size_t p = r.r.rows();
  if (p < 2) fail(ErrorCode::InvalidArgument, "sphericity needs at least two variables");
  const double np = static_cast<double>(r.n);
  const double pp = static_cast<double>(p);
  const double scale = np - 1.0 - (2.0 * pp + 5.0) / 6.0;
  if (!(scale > 0.0))
    fail(ErrorCode::InvalidArgument, "sample too small for the sphericity statistic");

  const LogDet det = log_abs_determinant(r.r);
  if (det.sign <= 0 || det.log_abs < std::log(1e-12))
    fail(ErrorCode::Numeric, "correlation matrix is singular; sphericity statistic undefined");

  BartlettResult result;
  result.statistic = -scale * det.log_abs;
  result.statistic += 0.0;  // normalize -0 from ln|I| = 0
  result.df = p * (p - 1) / 2;
  result.p_value = p_value(result.statistic,
                           Distribution::chi_square(static_cast<double>(result.df)),
                           Tail::Right);
  return result;
}

const char* kmo_band(double value) {
  if (value < 0.50) return "unacceptable";
  if (value < 0.60) return "miserable";
  if (value < 0.70) return "mediocre";
  if (value < 0.80) return "middling";
  if (value < 0.90) return "meritorious";
  return "marvelous";
}

KmoResult kmo(const CorrelationMatrix& r) {
  const std::size_t p = r.r.rows();
  if (p < 2) fail(ErrorCode::InvalidArgument, "the adequacy index needs at least two variables");
  const Matrix v = inverse(r.r);

  Matrix a(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      a(i, j) = -v(i, j) / std::sqrt(v(i, i) * v(j, j));

  KmoResult result;
  double sum_r2 = 0.0, sum_a2 = 0.0;
  result.per_variable.assign(p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    double col_r2 = 0.0, col_a2 = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      if (i == j) continue;
      col_r2 += r.r(i, j) * r.r(i, j);
      col_a2 += a(i, j) * a(i, j);
    }
    sum_r2 += col_r2;
    sum_a2 += col_a2;
    const double denom = col_r2 + col_a2;
    result.per_variable[j] = denom > 0.0 ? col_r2 / denom : 0.0;
  }
  const double denom = sum_r2 + sum_a2;
  result.overall = denom > 0.0 ? sum_r2 / denom : 0.0;
  result.band = kmo_band(result.overall);
  return result;
}

EigenPairs eigen_symmetric(const Matrix& a) {
  if (a.rows() != a.cols())
    fail(ErrorCode::InvalidArgument, "eigendecomposition needs a square matrix");
  double scale = 1.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      scale = std::max(scale, std::fabs(a(i, j)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (std::fabs(a(i, j) - a(j, i)) > 1e-10 * scale)
        fail(ErrorCode::InvalidArgument, "matrix is not symmetric");

  const EigenDecomposition d = symmetric_eigen(a);
  return {d.values, d.vectors};
}

namespace {

FactorSolution loadings_from_pairs(const EigenPairs& eigs, std::size_t p,
                                   std::size_t m) {
  FactorSolution solution;
  solution.loadings = Matrix(p, m);
  solution.eigenvalues.assign(eigs.values.begin(),
                              eigs.values.begin() + static_cast<std::ptrdiff_t>(m));
  solution.explained_shares.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double lambda = std::max(eigs.values[j], 0.0);
    const double root = std::sqrt(lambda);
    for (std::size_t i = 0; i < p; ++i)
      solution.loadings(i, j) = eigs.vectors(i, j) * root;
    solution.explained_shares[j] = lambda / static_cast<double>(p);
  }
  solution.communalities.assign(p, 0.0);
  solution.specific_variances.assign(p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    double h2 = 0.0;
    for (std::size_t j = 0; j < m; ++j) h2 += solution.loadings(i, j) * solution.loadings(i, j);
    solution.communalities[i] = h2;
    solution.specific_variances[i] = 1.0 - h2;
  }
  return solution;
}

}  // namespace

FactorSolution extract_pca(const CorrelationMatrix& r, std::size_t m) {
  const std::size_t p = r.r.rows();
  if (m < 1 || m >= p)
    fail(ErrorCode::InvalidArgument, "factor count must satisfy 1 <= m < p");
  const EigenPairs eigs = eigen_symmetric(r.r);
  FactorSolution solution = loadings_from_pairs(eigs, p, m);
  solution.extraction = "pca";
  solution.rotation = "none";
  return solution;
}

FactorSolution extract_principal_axis(const CorrelationMatrix& r, std::size_t m,
                                      std::size_t max_iter, double tol) {
  const std::size_t p = r.r.rows();
  if (m < 1 || m >= p)
    fail(ErrorCode::InvalidArgument, "factor count must satisfy 1 <= m < p");

  // Initial communalities: squared multiple correlations.
  const Matrix rinv = inverse(r.r);
  std::vector<double> h2(p);
  for (std::size_t i = 0; i < p; ++i) h2[i] = 1.0 - 1.0 / rinv(i, i);

  bool heywood = false;
  double delta = 0.0;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    Matrix reduced = r.r;
    for (std::size_t i = 0; i < p; ++i) reduced(i, i) = h2[i];
    const EigenDecomposition eig = symmetric_eigen(reduced);

    std::vector<double> next(p, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      const double lambda = std::max(eig.values[j], 0.0);
      for (std::size_t i = 0; i < p; ++i) {
        const double l = eig.vectors(i, j) * std::sqrt(lambda);
        next[i] += l * l;
      }
    }
    for (std::size_t i = 0; i < p; ++i) {
      if (next[i] > 1.0) {
        next[i] = 1.0;
        heywood = true;
      }
    }

    delta = 0.0;
    for (std::size_t i = 0; i < p; ++i) delta = std::max(delta, std::fabs(next[i] - h2[i]));
    h2 = next;
    if (delta <= tol) {
      Matrix final_reduced = r.r;
      for (std::size_t i = 0; i < p; ++i) final_reduced(i, i) = h2[i];
      const EigenDecomposition fe = symmetric_eigen(final_reduced);
      FactorSolution solution = loadings_from_pairs({fe.values, fe.vectors}, p, m);
      solution.extraction = "principal-axis";
      solution.rotation = "none";
      for (std::size_t i = 0; i < p; ++i) {
        if (solution.communalities[i] > 1.0) {
          const double scale = 1.0 / std::sqrt(solution.communalities[i]);
          for (std::size_t j = 0; j < m; ++j) solution.loadings(i, j) *= scale;
          solution.communalities[i] = 1.0;
          solution.specific_variances[i] = 0.0;
          heywood = true;
        }
      }
      if (heywood)
        solution.warnings.push_back(
            "communality above 1 clamped to 1 (improper solution)");
      return solution;
    }
  }
  fail(ErrorCode::Numeric,
       "principal-axis iteration did not converge after " + std::to_string(max_iter) +
           " steps; last max communality change " + std::to_string(delta));
}

std::size_t retain(const std::vector<double>& eigenvalues, RetentionRule rule,
                   double threshold, std::vector<std::string>* warnings) {
  if (eigenvalues.empty())
    fail(ErrorCode::InvalidArgument, "retention needs a nonempty spectrum");
  switch (rule) {
    case RetentionRule::Kaiser: {
      std::size_t m = 0;
      for (double v : eigenvalues)
        if (v > 1.0) ++m;
      if (m == 0) {
        m = 1;
        if (warnings)
          warnings->push_back("no eigenvalue above 1; retaining a single factor");
      }
      return m;
    }
    case RetentionRule::VarianceExplained: {
      if (!(threshold > 0.0 && threshold <= 1.0))
        fail(ErrorCode::InvalidArgument, "variance threshold must lie in (0, 1]");
      double total = 0.0;
      for (double v : eigenvalues) total += v;
      if (!(total > 0.0))
        fail(ErrorCode::Numeric, "nonpositive spectrum total; shares undefined");
      double cumulative = 0.0;
      for (std::size_t m = 1; m <= eigenvalues.size(); ++m) {
        cumulative += eigenvalues[m - 1] / total;
        if (cumulative >= threshold) return m;
      }
      return eigenvalues.size();
    }
    case RetentionRule::All:
      return eigenvalues.size();
  }
  fail(ErrorCode::InvalidArgument, "unknown retention rule");
}

std::vector<std::pair<std::size_t, double>> scree_data(
    const std::vector<double>& eigenvalues) {
  if (eigenvalues.empty())
    fail(ErrorCode::InvalidArgument, "scree data needs a nonempty spectrum");
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(eigenvalues.size());
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    out.emplace_back(i + 1, eigenvalues[i]);
  return out;
}

FactorSolution rotate(const FactorSolution& solution, RotationKind kind,
                      bool kaiser_normalize) {
  FactorSolution out = solution;
  out.rotation = kind == RotationKind::Varimax ? "varimax" : "quartimax";
  const std::size_t p = solution.loadings.rows();
  const std::size_t m = solution.loadings.cols();
  out.rotation_matrix = Matrix::identity(m);
  if (m < 2) return out;

  const double gamma = kind == RotationKind::Varimax ? 1.0 : 0.0;
  Matrix lam = solution.loadings;

  std::vector<double> row_scale(p, 1.0);
  if (kaiser_normalize) {
    for (std::size_t i = 0; i < p; ++i) {
      double h2 = 0.0;
      for (std::size_t j = 0; j < m; ++j) h2 += lam(i, j) * lam(i, j);
      if (h2 > 0.0) {
        row_scale[i] = std::sqrt(h2);
        for (std::size_t j = 0; j < m; ++j) lam(i, j) /= row_scale[i];
      }
    }
  }

  auto criterion = [&] {
    double q = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      double s2 = 0.0, s4 = 0.0;
      for (std::size_t i = 0; i < p; ++i) {
        const double sq = lam(i, j) * lam(i, j);
        s2 += sq;
        s4 += sq * sq;
      }
      q += s4 - gamma * s2 * s2 / static_cast<double>(p);
    }
    return q;
  };

  Matrix t = Matrix::identity(m);
  double previous = criterion();
  for (int sweep = 0; sweep < 100; ++sweep) {
    for (std::size_t j = 0; j + 1 < m; ++j) {
      for (std::size_t l = j + 1; l < m; ++l) {
        double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
        for (std::size_t i = 0; i < p; ++i) {
          const double u = lam(i, j) * lam(i, j) - lam(i, l) * lam(i, l);
          const double v = 2.0 * lam(i, j) * lam(i, l);
          a += u;
          b += v;
          c += u * u - v * v;
          d += 2.0 * u * v;
        }
        const double num = d - 2.0 * gamma * a * b / static_cast<double>(p);
        const double den = c - gamma * (a * a - b * b) / static_cast<double>(p);
        if (num == 0.0 && den == 0.0) continue;
        const double theta = 0.25 * std::atan2(num, den);
        if (std::fabs(theta) < 1e-14) continue;
        const double cs = std::cos(theta);
        const double sn = std::sin(theta);
        for (std::size_t i = 0; i < p; ++i) {
          const double lj = lam(i, j);
          const double ll = lam(i, l);
          lam(i, j) = cs * lj + sn * ll;
          lam(i, l) = -sn * lj + cs * ll;
        }
        for (std::size_t i = 0; i < m; ++i) {
          const double tj = t(i, j);
          const double tl = t(i, l);
          t(i, j) = cs * tj + sn * tl;
          t(i, l) = -sn * tj + cs * tl;
        }
      }
    }
    const double current = criterion();
    if (current - previous <= 1e-10) break;
    previous = current;
  }

  if (kaiser_normalize) {
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < m; ++j) lam(i, j) *= row_scale[i];
  }

  // Deterministic column orientation: largest-magnitude entry positive.
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < p; ++i) {
      if (std::fabs(lam(i, j)) > best) {
        best = std::fabs(lam(i, j));
        arg = i;
      }
    }
    if (lam(arg, j) < 0.0) {
      for (std::size_t i = 0; i < p; ++i) lam(i, j) = -lam(i, j);
      for (std::size_t i = 0; i < m; ++i) t(i, j) = -t(i, j);
    }
  }

  out.loadings = lam;
  out.rotation_matrix = t;
  for (std::size_t i = 0; i < p; ++i) {
    double h2 = 0.0;
    for (std::size_t j = 0; j < m; ++j) h2 += lam(i, j) * lam(i, j);
    out.communalities[i] = h2;
    out.specific_variances[i] = 1.0 - h2;
  }
  for (std::size_t j = 0; j < m; ++j) {
    double ss = 0.0;
    for (std::size_t i = 0; i < p; ++i) ss += lam(i, j) * lam(i, j);
    out.explained_shares[j] = ss / static_cast<double>(p);
  }
  return out;
}

const char* cronbach_band(double alpha) {
  if (alpha < 0.50) return "unacceptable";
  if (alpha < 0.60) return "poor";
  if (alpha < 0.70) return "questionable";
  if (alpha < 0.80) return "acceptable";
  if (alpha < 0.90) return "good";
  return "excellent";
}

CronbachResult cronbach_alpha(const Matrix& items) {
  const std::size_t n = items.rows();
  const std::size_t k = items.cols();
  if (k < 2) fail(ErrorCode::InvalidArgument, "internal consistency needs k >= 2 items");
  if (n < 2) fail(ErrorCode::InvalidArgument, "internal consistency needs n >= 2 rows");

  double item_var_sum = 0.0;
  for (std::size_t j = 0; j < k; ++j)
    item_var_sum += variance(items.column(j), VarianceMode::Sample);

  std::vector<double> totals(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) totals[i] += items(i, j);
  const double total_var = variance(totals, VarianceMode::Sample);
  if (!(total_var > 0.0))
    fail(ErrorCode::Data, "total score is constant; consistency undefined");

  CronbachResult result;
  result.alpha = (static_cast<double>(k) / static_cast<double>(k - 1)) *
                 (1.0 - item_var_sum / total_var);
  result.band = cronbach_band(result.alpha);
  return result;
}

}  // namespace statkit

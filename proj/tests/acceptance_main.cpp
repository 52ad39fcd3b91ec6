// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: ten end-to-end checks, one PASS/FAIL line each.
// Usage: statkit_acceptance <cli-path> [criterion-number]

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "core/classify.hpp"
#include "core/cluster.hpp"
#include "core/dataset.hpp"
#include "core/distributions.hpp"
#include "core/factor.hpp"
#include "core/inference.hpp"
#include "core/linalg.hpp"
#include "core/regression.hpp"
#include "core/rng.hpp"
#include "support/oracles.hpp"
#include "support/temp_dir.hpp"

namespace {

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

struct Gate {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

int run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = "'" + cli + "' " + args + " > /dev/null";
  return std::system(cmd.c_str());
}

const char* kColorsCsv =
    "color\nBlue\nRed\nBlue\nWhite\nGreen\nWhite\nBlue\nRed\nBlue\nBlack\n";

const char* kAgesCsv =
    "age\n20\n22\n21\n24\n21\n20\n20\n24\n22\n20\n22\n24\n21\n25\n20\n23\n22\n23\n21\n20\n";

const char* kHeightsCsv =
    "height\n1.58\n1.56\n1.77\n1.59\n1.63\n1.58\n1.82\n1.69\n1.76\n1.60\n"
    "1.73\n1.51\n1.54\n1.61\n1.67\n1.72\n1.75\n1.55\n1.68\n1.65\n";

// 1. The CLI reproduces the frozen frequency and summary tables.
void golden_tables(Gate& g, const std::string& cli) {
  testsupport::TempDir dir;
  const std::string root = dir.path().string();
  const std::string colors_csv = dir.write("colors.csv", kColorsCsv);
  const std::string ages_csv = dir.write("ages.csv", kAgesCsv);
  const std::string heights_csv = dir.write("heights.csv", kHeightsCsv);
  const std::string colors_cfg = dir.write(
      "colors.cfg", "input = " + colors_csv + "\noutput = " + root +
                        "/colors-out\n[frequencies]\ncolumn = color\n");
  const std::string ages_cfg = dir.write(
      "ages.cfg", "input = " + ages_csv + "\noutput = " + root +
                      "/ages-out\n[summary]\ncolumn = age\n");
  const std::string heights_cfg = dir.write(
      "heights.cfg", "input = " + heights_csv + "\noutput = " + root +
                         "/heights-out\n[frequencies]\ncolumn = height\n"
                         "lower = 1.50\nwidth = 0.05\nbins = 7\n");

  g.expect(run_cli(cli, "run --config '" + colors_cfg + "'") == 0,
           "categorical pipeline exited nonzero");
  g.expect(run_cli(cli, "run --config '" + ages_cfg + "'") == 0,
           "summary pipeline exited nonzero");
  g.expect(run_cli(cli, "run --config '" + heights_cfg + "'") == 0,
           "binned pipeline exited nonzero");

  const std::string colors = testsupport::read_file(root + "/colors-out/report.md");
  g.expect(contains(colors,
                    "| value | n | N | f | F |\n"
                    "| --- | --- | --- | --- | --- |\n"
                    "| Blue | 4 | 4 | 0.4 | 0.4 |\n"
                    "| Red | 2 | 6 | 0.2 | 0.6 |\n"
                    "| White | 2 | 8 | 0.2 | 0.8 |\n"
                    "| Green | 1 | 9 | 0.1 | 0.9 |\n"
                    "| Black | 1 | 10 | 0.1 | 1 |\n"
                    "\n"
                    "Total observations: 10\n"),
           "categorical frequency table does not match cell for cell");

  const std::string ages = testsupport::read_file(root + "/ages-out/report.md");
  const std::array<const char*, 6> cells{
      "| mean | 21.75 |",  "| median | 21.5 |", "| mode(s) | 20 |",
      "| Q1 | 20 |",       "| Q3 | 23 |",       "| range | 5 |"};
  for (const char* cell : cells)
    g.expect(contains(ages, cell), fmt("summary row missing: %s", cell));

  const std::string heights = testsupport::read_file(root + "/heights-out/report.md");
  g.expect(contains(heights,
                    "| (1.5, 1.55] | 3 | 3 | 0.15 | 0.15 |\n"
                    "| (1.55, 1.6] | 5 | 8 | 0.25 | 0.4 |\n"
                    "| (1.6, 1.65] | 3 | 11 | 0.15 | 0.55 |\n"
                    "| (1.65, 1.7] | 3 | 14 | 0.15 | 0.7 |\n"
                    "| (1.7, 1.75] | 3 | 17 | 0.15 | 0.85 |\n"
                    "| (1.75, 1.8] | 2 | 19 | 0.1 | 0.95 |\n"
                    "| (1.8, 1.85] | 1 | 20 | 0.05 | 1 |\n"),
           "interval frequency table does not match cell for cell");
}

// 2. Normal coverage triple against the rounded three-sigma targets.
void coverage_triple(Gate& g, const std::string&) {
  const auto cov = statkit::empirical_rule(statkit::Distribution::normal(0.0, 1.0));
  const std::array<double, 3> target{0.683, 0.955, 0.997};
  const std::array<double, 3> integral{0.6826894921370859, 0.9544997361036416,
                                       0.9973002039367398};
  for (int i = 0; i < 3; ++i)
    g.expect(near(cov[i], target[i], 5e-4),
             fmt("coverage within %d sigma = %.16f misses %.3f by %.3e (limit 5.000e-04)",
                 i + 1, cov[i], target[i], std::fabs(cov[i] - target[i])));
  bool matches_integral = true;
  for (int i = 0; i < 3; ++i)
    matches_integral = matches_integral && near(cov[i], integral[i], 1e-9);
  g.note(fmt("computed coverages: %.16f, %.16f, %.16f", cov[0], cov[1], cov[2]));
  g.note(matches_integral
             ? "computed coverages agree with the closed-form normal integrals to 1e-9; "
               "the exact two-sigma coverage lies 5.003e-04 from the rounded 0.955 "
               "target, just outside the 5e-4 window"
             : "WARNING: computed coverages disagree with the closed-form integrals");
}

// 3. Seeded two-point resampling concentrates at the population mean.
void sampling_concentration(Gate& g, const std::string&) {
  const auto rep = statkit::clt_simulate(std::vector<double>{0.0, 1.0}, 50, 10000, 42);
  const double se = 0.5 / std::sqrt(50.0 * 10000.0);
  g.expect(std::fabs(rep.mean_of_means - 0.5) <= 3.0 * se,
           fmt("mean of sample means %.8f is %.3e from 0.5 (limit %.3e)",
               rep.mean_of_means, std::fabs(rep.mean_of_means - 0.5), 3.0 * se));
  g.expect(std::fabs(rep.skewness) < 0.15,
           fmt("standardized skewness %.5f (limit 0.15)", rep.skewness));
}

statkit::CorrelationMatrix two_by_two(double r, std::size_t n) {
  statkit::CorrelationMatrix c;
  c.r = statkit::Matrix::identity(2);
  c.r(0, 1) = r;
  c.r(1, 0) = r;
  c.n = n;
  return c;
}

// 4. Sphericity statistic, sampling-adequacy index and its verbal bands.
void sphericity_and_adequacy(Gate& g, const std::string&) {
  statkit::CorrelationMatrix id;
  id.r = statkit::Matrix::identity(3);
  id.n = 50;
  const auto b0 = statkit::bartlett_sphericity(id);
  g.expect(b0.statistic == 0.0, fmt("identity statistic %.17g, want exactly 0", b0.statistic));
  g.expect(b0.p_value == 1.0, fmt("identity p-value %.17g, want exactly 1", b0.p_value));
  g.expect(b0.df == 3, fmt("identity df %zu, want 3", b0.df));

  const auto b1 = statkit::bartlett_sphericity(two_by_two(0.5, 20));
  g.expect(near(b1.statistic, 5.034, 1e-3),
           fmt("statistic %.12f vs 5.034 (tol 1e-3)", b1.statistic));
  g.expect(b1.df == 1, fmt("df %zu, want 1", b1.df));

  for (double r : {0.3, -0.7, 0.9}) {
    const auto k = statkit::kmo(two_by_two(r, 100));
    g.expect(near(k.overall, 0.5, 1e-9),
             fmt("overall adequacy %.12f for r = %.1f, want 0.5 within 1e-9", k.overall, r));
  }

  const std::array<std::pair<double, const char*>, 6> bands{{{0.45, "unacceptable"},
                                                             {0.55, "miserable"},
                                                             {0.65, "mediocre"},
                                                             {0.75, "middling"},
                                                             {0.85, "meritorious"},
                                                             {0.95, "marvelous"}}};
  for (const auto& [value, want] : bands)
    g.expect(std::string(statkit::kmo_band(value)) == want,
             fmt("band at %.2f is '%s', want '%s'", value, statkit::kmo_band(value), want));
}

statkit::Matrix correlated_data(statkit::Rng& rng, std::size_t n, std::size_t p) {
  statkit::Matrix data(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    const double shared = rng.normal();
    for (std::size_t j = 0; j < p; ++j) data(i, j) = rng.normal() + 0.5 * shared;
  }
  return data;
}

// 5. Eigen and least-squares identities on seeded random problems.
void algebra_identities(Gate& g, const std::string&) {
  statkit::Rng rng(2026);
  double worst_residual = 0.0;
  double worst_trace = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t p = 2 + static_cast<std::size_t>(t % 7);
    const std::size_t n = 20 + static_cast<std::size_t>(t % 5) * 8;
    const auto c = statkit::correlation_matrix(correlated_data(rng, n, p));
    const auto e = statkit::eigen_symmetric(c.r);
    const double trace = std::accumulate(e.values.begin(), e.values.end(), 0.0);
    worst_trace = std::max(worst_trace, std::fabs(trace - static_cast<double>(p)));
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t i = 0; i < p; ++i) {
        double rv = 0.0;
        for (std::size_t k = 0; k < p; ++k) rv += c.r(i, k) * e.vectors(k, j);
        worst_residual = std::max(worst_residual, std::fabs(rv - e.values[j] * e.vectors(i, j)));
      }
    }
  }
  g.expect(worst_residual <= 1e-8,
           fmt("largest eigenpair residual %.3e over 100 problems (limit 1e-8)", worst_residual));
  g.expect(worst_trace <= 1e-8,
           fmt("largest eigenvalue-sum gap %.3e over 100 problems (limit 1e-8)", worst_trace));

  double worst_decomposition = 0.0;
  double worst_orthogonality = 0.0;
  double worst_f_vs_t = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t p = 1 + static_cast<std::size_t>(t % 4);
    const std::size_t n = p + 3 + static_cast<std::size_t>(t % 18);
    statkit::Matrix x(n, p);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      double yi = 1.5;
      for (std::size_t j = 0; j < p; ++j) {
        x(i, j) = rng.uniform(-2.0, 2.0);
        yi += (0.5 + static_cast<double>(j)) * x(i, j);
      }
      y[i] = yi + 0.5 * rng.normal();
    }
    const auto model = statkit::fit_ols(x, y);
    const auto tab = statkit::anova(model, y);
    worst_decomposition =
        std::max(worst_decomposition,
                 std::fabs(tab.sst - (tab.ssm + tab.sse)) / std::max(1.0, tab.sst));
    double rnorm = 0.0;
    double rsum = 0.0;
    for (double r : model.residuals) {
      rnorm += r * r;
      rsum += r;
    }
    rnorm = std::sqrt(rnorm);
    worst_orthogonality =
        std::max(worst_orthogonality,
                 std::fabs(rsum) / std::max(1.0, rnorm * std::sqrt(static_cast<double>(n))));
    for (std::size_t j = 0; j < p; ++j) {
      double dot = 0.0;
      double xnorm = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        dot += model.residuals[i] * x(i, j);
        xnorm += x(i, j) * x(i, j);
      }
      xnorm = std::sqrt(xnorm);
      worst_orthogonality =
          std::max(worst_orthogonality, std::fabs(dot) / std::max(1.0, rnorm * xnorm));
    }
    if (p == 1) {
      const auto tests = statkit::coefficient_tests(model, y);
      const double slope_t = tests[1].t;
      worst_f_vs_t = std::max(worst_f_vs_t,
                              std::fabs(tab.f - slope_t * slope_t) / std::max(1.0, tab.f));
    }
  }
  g.expect(worst_decomposition <= 1e-8,
           fmt("largest SST vs SSM+SSE relative gap %.3e (limit 1e-8)", worst_decomposition));
  g.expect(worst_orthogonality <= 1e-8,
           fmt("largest residual-predictor alignment %.3e (limit 1e-8)", worst_orthogonality));
  g.expect(worst_f_vs_t <= 1e-8,
           fmt("largest F vs t^2 relative gap %.3e (limit 1e-8)", worst_f_vs_t));
}

// 6. Varimax recovers an axis-aligned structure from a 45-degree mix.
void rotation_recovery(Gate& g, const std::string&) {
  statkit::Matrix target(6, 2);
  for (std::size_t i = 0; i < 3; ++i) target(i, 0) = 0.8;
  for (std::size_t i = 3; i < 6; ++i) target(i, 1) = 0.7;
  const double c = std::sqrt(0.5);
  statkit::Matrix mixed(6, 2);
  for (std::size_t i = 0; i < 6; ++i) {
    mixed(i, 0) = target(i, 0) * c + target(i, 1) * c;
    mixed(i, 1) = -target(i, 0) * c + target(i, 1) * c;
  }

  statkit::FactorSolution sol;
  sol.loadings = mixed;
  sol.communalities.resize(6);
  sol.specific_variances.resize(6);
  for (std::size_t i = 0; i < 6; ++i) {
    const double h2 = mixed(i, 0) * mixed(i, 0) + mixed(i, 1) * mixed(i, 1);
    sol.communalities[i] = h2;
    sol.specific_variances[i] = 1.0 - h2;
  }
  sol.eigenvalues.assign(2, 0.0);
  sol.explained_shares.assign(2, 0.0);
  for (std::size_t j = 0; j < 2; ++j) {
    double ss = 0.0;
    for (std::size_t i = 0; i < 6; ++i) ss += mixed(i, j) * mixed(i, j);
    sol.eigenvalues[j] = ss;
    sol.explained_shares[j] = ss / 6.0;
  }
  sol.extraction = "pca";
  sol.rotation = "none";
  sol.rotation_matrix = statkit::Matrix::identity(2);

  const auto rot = statkit::rotate(sol, statkit::RotationKind::Varimax);

  double best = std::numeric_limits<double>::infinity();
  for (int perm = 0; perm < 2; ++perm) {
    double worst = 0.0;
    for (std::size_t j = 0; j < 2; ++j) {
      const std::size_t src = perm == 0 ? j : 1 - j;
      double peak = -1.0;
      double sign = 1.0;
      for (std::size_t i = 0; i < 6; ++i) {
        if (std::fabs(rot.loadings(i, src)) > peak) {
          peak = std::fabs(rot.loadings(i, src));
          sign = rot.loadings(i, src) >= 0.0 ? 1.0 : -1.0;
        }
      }
      for (std::size_t i = 0; i < 6; ++i)
        worst = std::max(worst, std::fabs(sign * rot.loadings(i, src) - target(i, j)));
    }
    best = std::min(best, worst);
  }
  g.expect(best <= 1e-6,
           fmt("loading mismatch %.3e after permutation and sign alignment (limit 1e-6)", best));

  double worst_h2 = 0.0;
  for (std::size_t i = 0; i < 6; ++i)
    worst_h2 = std::max(worst_h2, std::fabs(rot.communalities[i] - sol.communalities[i]));
  g.expect(worst_h2 <= 1e-10, fmt("communality drift %.3e (limit 1e-10)", worst_h2));

  double worst_orth = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < 2; ++k)
        dot += rot.rotation_matrix(k, i) * rot.rotation_matrix(k, j);
      worst_orth = std::max(worst_orth, std::fabs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  g.expect(worst_orth <= 1e-10,
           fmt("rotation matrix orthogonality defect %.3e (limit 1e-10)", worst_orth));
}

// 7. Linkage merges, single-linkage heights and the k-means optimum.
void clustering_against_oracles(Gate& g, const std::string&) {
  struct LinkPair {
    statkit::LinkageKind lib;
    oracle::NaiveLinkage naive;
    const char* name;
  };
  const std::array<LinkPair, 6> linkages{{
      {statkit::LinkageKind::Single, oracle::NaiveLinkage::Single, "single"},
      {statkit::LinkageKind::Complete, oracle::NaiveLinkage::Complete, "complete"},
      {statkit::LinkageKind::AverageBetween, oracle::NaiveLinkage::AverageBetween,
       "average-between"},
      {statkit::LinkageKind::AverageWithin, oracle::NaiveLinkage::AverageWithin,
       "average-within"},
      {statkit::LinkageKind::Centroid, oracle::NaiveLinkage::Centroid, "centroid"},
      {statkit::LinkageKind::Ward, oracle::NaiveLinkage::Ward, "ward"},
  }};

  statkit::Rng rng(77);
  int merge_mismatches = 0;
  std::string first_merge;
  double worst_mst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 4 + static_cast<std::size_t>(t % 9);
    const std::size_t dim = 1 + static_cast<std::size_t>(t % 3);
    statkit::Matrix pts(n, dim);
    oracle::Mat raw(n, std::vector<double>(dim));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const double v = rng.uniform(0.0, 10.0);
        pts(i, j) = v;
        raw[i][j] = v;
      }
    }
    for (const auto& lk : linkages) {
      const auto dend = statkit::agglomerate_points(pts, lk.lib);
      const auto naive = oracle::naive_agglomerate(raw, lk.naive);
      if (dend.steps.size() != naive.size()) {
        ++merge_mismatches;
        if (first_merge.empty())
          first_merge = fmt("case %d %s: %zu steps vs %zu", t, lk.name, dend.steps.size(),
                            naive.size());
        continue;
      }
      for (std::size_t s = 0; s < naive.size(); ++s) {
        const auto& got = dend.steps[s];
        const auto& want = naive[s];
        const bool same = got.a == want.a && got.b == want.b && got.id == want.id &&
                          got.size == want.size &&
                          std::fabs(got.height - want.height) <=
                              1e-9 * std::max(1.0, std::fabs(want.height));
        if (!same) {
          ++merge_mismatches;
          if (first_merge.empty())
            first_merge = fmt("case %d %s step %zu: (%zu, %zu, %.12f) vs (%zu, %zu, %.12f)", t,
                              lk.name, s, got.a, got.b, got.height, want.a, want.b, want.height);
          break;
        }
      }
    }
    const auto single = statkit::agglomerate_points(pts, statkit::LinkageKind::Single);
    std::vector<double> heights;
    heights.reserve(single.steps.size());
    for (const auto& s : single.steps) heights.push_back(s.height);
    std::sort(heights.begin(), heights.end());
    const auto mst = oracle::mst_edge_weights(raw);
    if (heights.size() != mst.size()) {
      ++merge_mismatches;
    } else {
      for (std::size_t i = 0; i < mst.size(); ++i)
        worst_mst = std::max(worst_mst,
                             std::fabs(heights[i] - mst[i]) / std::max(1.0, mst[i]));
    }
  }
  g.expect(merge_mismatches == 0,
           fmt("%d merge mismatches against the naive oracle; first: %s", merge_mismatches,
               first_merge.c_str()));
  g.expect(worst_mst <= 1e-12,
           fmt("largest single-linkage vs spanning-tree gap %.3e (limit 1e-12)", worst_mst));

  statkit::Matrix four(4, 1);
  four(0, 0) = 0.0;
  four(1, 0) = 1.0;
  four(2, 0) = 10.0;
  four(3, 0) = 11.0;
  const auto km = statkit::kmeans(four, 2);
  g.expect(std::fabs(km.wss - 1.0) <= 1e-12,
           fmt("k-means WSS %.15f, want 1.0 within 1e-12", km.wss));
  const oracle::Mat raw4{{0.0}, {1.0}, {10.0}, {11.0}};
  const double optimum = oracle::best_two_cluster_wss(raw4);
  g.expect(std::fabs(km.wss - optimum) <= 1e-12,
           fmt("k-means WSS %.15f vs exhaustive optimum %.15f", km.wss, optimum));

  int history_violations = 0;
  for (int s = 0; s < 20; ++s) {
    statkit::Matrix cloud(12, 2);
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j < 2; ++j) cloud(i, j) = rng.uniform(0.0, 10.0);
    statkit::KMeansInit init;
    init.kind = statkit::KMeansInit::Kind::SeededRandom;
    init.seed = static_cast<std::uint64_t>(s);
    const auto res = statkit::kmeans(cloud, 2 + static_cast<std::size_t>(s % 3), init);
    for (std::size_t i = 1; i < res.wss_history.size(); ++i)
      if (res.wss_history[i] > res.wss_history[i - 1] * (1.0 + 1e-12) + 1e-12)
        ++history_violations;
    if (!res.wss_history.empty() &&
        std::fabs(res.wss - res.wss_history.back()) > 1e-12 * std::max(1.0, res.wss))
      ++history_violations;
  }
  g.expect(history_violations == 0,
           fmt("%d objective increases across seeded k-means runs", history_violations));
}

// 8. Reject decisions, intervals and exact binomial tails agree.
void inference_duality(Gate& g, const std::string&) {
  statkit::Rng rng(11);
  const std::array<double, 3> alphas{0.01, 0.05, 0.10};
  const std::array<statkit::Tail, 3> tails{statkit::Tail::Left, statkit::Tail::Right,
                                           statkit::Tail::Two};

  int duality_violations = 0;
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 8 + rng.below(20);
    std::vector<double> a(n), b(n + 2);
    const double mu = rng.uniform(0.0, 2.0);
    for (auto& v : a) v = mu + rng.normal();
    for (auto& v : b) v = rng.uniform(-1.0, 1.0) + 1.4 * rng.normal();
    const double xbar = oracle::mean(a);
    const double mu0 = rng.uniform(-1.0, 3.0);
    const double sigma0_sq = rng.uniform(0.4, 3.0);
    const std::size_t trials = 5 + rng.below(40);
    const std::size_t successes = rng.below(trials + 1);
    const double p0 = rng.uniform(0.05, 0.95);
    for (double alpha : alphas) {
      for (statkit::Tail tail : tails) {
        const std::array<statkit::TestResult, 5> results{
            statkit::z_test_mean(xbar, n, mu0, 1.2, tail, alpha),
            statkit::t_test_mean(a, mu0, tail, alpha),
            statkit::chi2_test_variance(a, sigma0_sq, tail, alpha),
            statkit::f_test_variance_ratio(a, b, tail, alpha),
            statkit::proportion_test(successes, trials, p0, tail, alpha)};
        for (const auto& r : results)
          if (r.reject != (r.p_value < alpha)) ++duality_violations;
      }
    }
  }
  g.expect(duality_violations == 0,
           fmt("%d decisions disagree with p < alpha", duality_violations));

  int ci_violations = 0;
  for (int t = 0; t < 100; ++t) {
    const double sigma = 0.5 + 2.0 * rng.uniform();
    const std::size_t n = 5 + rng.below(50);
    const double xbar = rng.uniform(-5.0, 5.0);
    const double mu0 = xbar + rng.uniform(-1.0, 1.0) * sigma;
    const double alpha = alphas[static_cast<std::size_t>(t) % 3];
    const auto r = statkit::z_test_mean(xbar, n, mu0, sigma, statkit::Tail::Two, alpha);
    const auto ci = statkit::ci_mean_z(xbar, n, sigma, 1.0 - alpha);
    const bool inside = mu0 >= ci.lower && mu0 <= ci.upper;
    if (r.reject == inside) ++ci_violations;
  }
  g.expect(ci_violations == 0,
           fmt("%d two-sided decisions disagree with the matching interval", ci_violations));

  int wrong_branch = 0;
  double worst_exact = 0.0;
  for (std::size_t n = 1; n <= 20; ++n) {
    for (double p0 : {0.1, 0.37, 0.5, 0.82}) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (statkit::Tail tail : tails) {
          const auto r = statkit::proportion_test(k, n, p0, tail, 0.05);
          if (r.df_label != "exact") {
            ++wrong_branch;
            continue;
          }
          const double left = oracle::binomial_left_tail(n, p0, k);
          const double right = oracle::binomial_right_tail(n, p0, k);
          const double want = tail == statkit::Tail::Left    ? left
                              : tail == statkit::Tail::Right ? right
                                  : std::min(1.0, 2.0 * std::min(left, right));
          worst_exact = std::max(worst_exact, std::fabs(r.p_value - want));
        }
      }
    }
  }
  g.expect(wrong_branch == 0,
           fmt("%d small-sample cases skipped the exact branch", wrong_branch));
  g.expect(worst_exact <= 1e-12,
           fmt("largest exact-tail gap vs full enumeration %.3e (limit 1e-12)", worst_exact));
}

statkit::Column nominal_column(const std::string& name, const std::vector<std::string>& labels) {
  statkit::Column col;
  col.name = name;
  col.kind = statkit::VariableKind::Nominal;
  col.labels = labels;
  col.missing.assign(labels.size(), false);
  for (const std::string& s : labels)
    if (std::find(col.levels.begin(), col.levels.end(), s) == col.levels.end())
      col.levels.push_back(s);
  return col;
}

// 9. One-rule training error equals the brute-force minimum.
void one_rule_optimality(Gate& g, const std::string&) {
  statkit::Rng rng(5);
  int mismatches = 0;
  std::string first;
  for (int t = 0; t < 50; ++t) {
    const std::size_t attrs = 1 + rng.below(6);
    const std::size_t classes = 2 + rng.below(3);
    const std::size_t rows = 10 + rng.below(31);
    statkit::Dataset ds;
    std::vector<std::vector<std::string>> attr_vals(attrs);
    for (std::size_t a = 0; a < attrs; ++a) {
      const std::size_t values = 2 + rng.below(11);
      std::vector<std::string> labels(rows);
      for (std::size_t r = 0; r < rows; ++r)
        labels[r] = "v" + std::to_string(rng.below(values));
      attr_vals[a] = labels;
      ds.columns.push_back(nominal_column("a" + std::to_string(a), labels));
    }
    std::vector<std::string> cls(rows);
    for (std::size_t r = 0; r < rows; ++r) cls[r] = "c" + std::to_string(rng.below(classes));
    cls[0] = "c0";
    cls[1] = "c1";
    ds.columns.push_back(nominal_column("class", cls));

    const auto rule = statkit::train_oner(statkit::labeled(ds, "class"), 4);
    const long got = std::lround(rule.training_error * static_cast<double>(rows));
    const long want = static_cast<long>(oracle::one_rule_min_misses(attr_vals, cls));
    if (got != want) {
      ++mismatches;
      if (first.empty())
        first = fmt("case %d: rule misses %ld, brute force %ld", t, got, want);
    }
  }
  g.expect(mismatches == 0,
           fmt("%d rules above the brute-force minimum; first: %s", mismatches, first.c_str()));
}

// 10. Same config and seed produce byte-identical reports.
void deterministic_reports(Gate& g, const std::string& cli) {
  testsupport::TempDir dir;
  const std::string root = dir.path().string();
  const std::string csv = dir.write(
      "panel.csv", "x,y\n1,2.1\n2,4.9\n3,3.2\n4,6.8\n5,5.1\n6,8.9\n7,7.2\n8,9.8\n");
  const std::string cfg = dir.write(
      "panel.cfg", "input = " + csv +
                       "\nseed = 123\n"
                       "[summary]\ncolumn = x\nchart = boxplot\n"
                       "[efa]\ncolumns = x, y\nfactors = 1\nrotation = none\nchart = scree\n"
                       "[cluster]\ncolumns = x, y\nmethod = kmeans\nk = 2\ninit = random\n");

  g.expect(run_cli(cli, "run --config '" + cfg + "' --out '" + root + "/one'") == 0,
           "first run exited nonzero");
  g.expect(run_cli(cli, "run --config '" + cfg + "' --out '" + root + "/two'") == 0,
           "second run exited nonzero");

  const std::string r1 = testsupport::read_file(root + "/one/report.md");
  const std::string r2 = testsupport::read_file(root + "/two/report.md");
  g.expect(!r1.empty(), "first report is empty");
  g.expect(r1 == r2, "reports differ between identical seeded runs");

  for (const char* chart : {"charts/01-boxplot.json", "charts/02-scree.json"}) {
    const std::string c1 = testsupport::read_file(root + "/one/" + chart);
    const std::string c2 = testsupport::read_file(root + "/two/" + chart);
    g.expect(!c1.empty(), fmt("missing chart %s", chart));
    g.expect(c1 == c2, fmt("chart %s differs between identical seeded runs", chart));
  }
}

struct Criterion {
  const char* label;
  long budget_ms;
  void (*run)(Gate&, const std::string&);
};

const std::array<Criterion, 10> kCriteria{{
    {"CLI reproduces the frozen frequency and summary tables", 1000, golden_tables},
    {"normal coverages match (0.683, 0.955, 0.997) within 0.0005", 1000, coverage_triple},
    {"seeded resampling matches the population mean within 3 SE", 5000, sampling_concentration},
    {"sphericity statistic, adequacy index and its verbal bands", 0, sphericity_and_adequacy},
    {"eigen and least-squares identities on 100 seeded problems", 0, algebra_identities},
    {"varimax recovers an axis-aligned structure from a 45-degree mix", 0, rotation_recovery},
    {"linkage merges, spanning-tree heights and the k-means optimum", 0,
     clustering_against_oracles},
    {"reject decisions, intervals and exact binomial tails agree", 0, inference_duality},
    {"one-rule training error equals the brute-force minimum", 0, one_rule_optimality},
    {"same config and seed produce byte-identical reports", 0, deterministic_reports},
}};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2 || argc > 3) {
    std::fprintf(stderr, "usage: %s <cli-path> [criterion 1..10]\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  int only = 0;
  if (argc == 3) {
    only = std::atoi(argv[2]);
    if (only < 1 || only > 10) {
      std::fprintf(stderr, "criterion must be 1..10, got '%s'\n", argv[2]);
      return 2;
    }
  }
  unsetenv("STATKIT_SEED");

  int failures = 0;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    const auto& criterion = kCriteria[i];
    Gate gate;
    const auto start = std::chrono::steady_clock::now();
    criterion.run(gate, cli);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (criterion.budget_ms > 0 && elapsed > criterion.budget_ms)
      gate.expect(false, fmt("took %ld ms, budget %ld ms", static_cast<long>(elapsed),
                             criterion.budget_ms));
    std::printf("%s %2zu. %s (%ld ms)\n", gate.ok ? "PASS" : "FAIL", i + 1, criterion.label,
                static_cast<long>(elapsed));
    for (const std::string& note : gate.notes) std::printf("        - %s\n", note.c_str());
    if (!gate.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

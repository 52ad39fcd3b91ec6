// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#include "core/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "core/descriptive.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

namespace statkit {

namespace {

void check_dims(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size())
    fail(ErrorCode::InvalidArgument, "distance needs vectors of equal dimension");
  if (p.empty()) fail(ErrorCode::InvalidArgument, "distance needs at least one dimension");
}

bool is_binary(const std::vector<double>& v) {
  for (double x : v)
    if (x != 0.0 && x != 1.0) return false;
  return true;
}

double squared_euclidean(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - q[i];
    s += d * d;
  }
  return s;
}

}  // namespace

double jaccard_similarity(const std::vector<double>& u, const std::vector<double>& v) {
  check_dims(u, v);
  if (!is_binary(u) || !is_binary(v))
    fail(ErrorCode::InvalidArgument, "the shared-to-union ratio needs binary vectors");
  std::size_t m11 = 0, m10 = 0, m01 = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 1.0 && v[i] == 1.0) ++m11;
    else if (u[i] == 1.0) ++m10;
    else if (v[i] == 1.0) ++m01;
  }
  const std::size_t denom = m11 + m10 + m01;
  if (denom == 0) return 1.0;  // two empty sets are identical
  return static_cast<double>(m11) / static_cast<double>(denom);
}

double distance(const std::vector<double>& p, const std::vector<double>& q,
                const DistanceSpec& spec) {
  check_dims(p, q);
  switch (spec.kind) {
    case DistanceKind::Euclidean:
      return std::sqrt(squared_euclidean(p, q));
    case DistanceKind::Minkowski: {
      const double c = spec.minkowski_c;
      if (!(c >= 1.0))
        fail(ErrorCode::InvalidArgument, "Minkowski order must satisfy c >= 1");
      double s = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i)
        s += std::pow(std::fabs(p[i] - q[i]), c);
      return std::pow(s, 1.0 / c);
    }
    case DistanceKind::CosineDissimilarity: {
      double dot = 0.0, np = 0.0, nq = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        dot += p[i] * q[i];
        np += p[i] * p[i];
        nq += q[i] * q[i];
      }
      if (np == 0.0 || nq == 0.0)
        fail(ErrorCode::InvalidArgument, "cosine measure is undefined for a zero vector");
      return 1.0 - dot / std::sqrt(np * nq);
    }
    case DistanceKind::JaccardDissimilarity:
      return 1.0 - jaccard_similarity(p, q);
  }
  fail(ErrorCode::InvalidArgument, "unknown distance kind");
}

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2) fail(ErrorCode::InvalidArgument, "correlation needs n >= 2 paired values");
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    fail(ErrorCode::Data, "constant column; correlation undefined");
  return sxy / std::sqrt(sxx * syy);
}

// Midranks: tied values share the average of their rank positions.
std::vector<double> midranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double r = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

std::size_t level_index(const Column& col, const std::string& label) {
  const auto it = std::find(col.levels.begin(), col.levels.end(), label);
  return static_cast<std::size_t>(it - col.levels.begin());
}

}  // namespace

double variable_similarity(const Column& a, const Column& b) {
  if (a.size() != b.size())
    fail(ErrorCode::InvalidArgument, "columns must have the same length");

  if (a.is_numeric() && b.is_numeric()) {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.missing[i] || b.missing[i]) continue;
      x.push_back(a.numeric[i]);
      y.push_back(b.numeric[i]);
    }
    return pearson(x, y);
  }

  if (a.kind == VariableKind::Ordinal && b.kind == VariableKind::Ordinal) {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.missing[i] || b.missing[i]) continue;
      x.push_back(static_cast<double>(level_index(a, a.labels[i])));
      y.push_back(static_cast<double>(level_index(b, b.labels[i])));
    }
    return pearson(midranks(x), midranks(y));
  }

  if (a.kind == VariableKind::Nominal && b.kind == VariableKind::Nominal) {
    std::map<std::string, std::size_t> rows, cols;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.missing[i] || b.missing[i]) continue;
      const auto ra = rows.emplace(a.labels[i], rows.size()).first->second;
      const auto cb = cols.emplace(b.labels[i], cols.size()).first->second;
      pairs.emplace_back(ra, cb);
    }
    if (rows.size() < 2 || cols.size() < 2)
      fail(ErrorCode::Data, "constant column; association undefined");
    const double n = static_cast<double>(pairs.size());
    Matrix observed(rows.size(), cols.size());
    for (const auto& [r, c] : pairs) observed(r, c) += 1.0;
    std::vector<double> row_total(rows.size(), 0.0), col_total(cols.size(), 0.0);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        row_total[r] += observed(r, c);
        col_total[c] += observed(r, c);
      }
    double chi2 = 0.0;
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const double expected = row_total[r] * col_total[c] / n;
        if (expected > 0.0) {
          const double d = observed(r, c) - expected;
          chi2 += d * d / expected;
        }
      }
    return std::sqrt(chi2 / n);
  }

  fail(ErrorCode::InvalidArgument,
       "columns '" + a.name + "' and '" + b.name + "' have incompatible kinds");
}

const char* linkage_name(LinkageKind kind) {
  switch (kind) {
    case LinkageKind::Single: return "single";
    case LinkageKind::Complete: return "complete";
    case LinkageKind::AverageBetween: return "average-between";
    case LinkageKind::AverageWithin: return "average-within";
    case LinkageKind::Centroid: return "centroid";
    case LinkageKind::Ward: return "ward";
  }
  return "?";
}

namespace {

// Shared agglomeration loop. The matrix holds the current merge
// criterion per pair: plain dissimilarity for single/complete/average,
// squared quantities for centroid and Ward, cross-pair sums for
// average-within (whose criterion is derived per candidate).
struct AgglomerationState {
  LinkageKind kind;
  std::size_t n = 0;
  std::vector<double> matrix;     // n x n, symmetric working values
  std::vector<double> intra;      // average-within: summed in-cluster distances
  std::vector<bool> active;
  std::vector<std::size_t> id;
  std::vector<std::size_t> size;

  double& at(std::size_t i, std::size_t j) { return matrix[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return matrix[i * n + j]; }

  static double choose2(std::size_t c) {
    return 0.5 * static_cast<double>(c) * static_cast<double>(c - 1);
  }

  // Value the merge loop minimizes for slots (i, j).
  double criterion(std::size_t i, std::size_t j) const {
    if (kind == LinkageKind::AverageWithin)
      return (intra[i] + intra[j] + at(i, j)) / choose2(size[i] + size[j]);
    return at(i, j);
  }

  // Reported merge height for the chosen pair.
  double height(std::size_t i, std::size_t j) const {
    switch (kind) {
      case LinkageKind::Centroid: return std::sqrt(std::max(at(i, j), 0.0));
      case LinkageKind::Ward: return 0.5 * at(i, j);
      default: return criterion(i, j);
    }
  }
};

Dendrogram run_agglomeration(AgglomerationState state) {
  const std::size_t n = state.n;
  if (n < 2) fail(ErrorCode::InvalidArgument, "clustering needs at least two items");

  Dendrogram out;
  out.leaves = n;
  std::size_t next_id = n;

  for (std::size_t step = 0; step + 1 < n; ++step) {
    // Globally smallest criterion; ties toward the smallest id pair.
    std::size_t best_i = 0, best_j = 0;
    double best_value = std::numeric_limits<double>::infinity();
    std::size_t best_a = 0, best_b = 0;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!state.active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!state.active[j]) continue;
        const double value = state.criterion(i, j);
        const std::size_t a = std::min(state.id[i], state.id[j]);
        const std::size_t b = std::max(state.id[i], state.id[j]);
        if (!found || value < best_value ||
            (value == best_value && (a < best_a || (a == best_a && b < best_b)))) {
          found = true;
          best_value = value;
          best_i = i;
          best_j = j;
          best_a = a;
          best_b = b;
        }
      }
    }

    const std::size_t i = best_i, j = best_j;
    const double dij = state.at(i, j);
    const double nr = static_cast<double>(state.size[i]);
    const double ns = static_cast<double>(state.size[j]);
    const double nt = nr + ns;

    MergeStep merge;
    merge.a = best_a;
    merge.b = best_b;
    merge.height = state.height(i, j);
    merge.id = next_id++;
    merge.size = state.size[i] + state.size[j];
    out.steps.push_back(merge);

    for (std::size_t k = 0; k < n; ++k) {
      if (!state.active[k] || k == i || k == j) continue;
      const double dik = state.at(i, k);
      const double djk = state.at(j, k);
      double updated = 0.0;
      switch (state.kind) {
        case LinkageKind::Single:
          updated = std::min(dik, djk);
          break;
        case LinkageKind::Complete:
          updated = std::max(dik, djk);
          break;
        case LinkageKind::AverageBetween:
          updated = (nr * dik + ns * djk) / nt;
          break;
        case LinkageKind::AverageWithin:
          updated = dik + djk;  // cross-pair sums are additive
          break;
        case LinkageKind::Centroid:
          updated = (nr * dik + ns * djk) / nt - nr * ns * dij / (nt * nt);
          break;
        case LinkageKind::Ward: {
          const double nk = static_cast<double>(state.size[k]);
          updated = ((nr + nk) * dik + (ns + nk) * djk - nk * dij) / (nt + nk);
          break;
        }
      }
      state.at(i, k) = updated;
      state.at(k, i) = updated;
    }

    if (state.kind == LinkageKind::AverageWithin)
      state.intra[i] = state.intra[i] + state.intra[j] + dij;
    state.size[i] += state.size[j];
    state.id[i] = merge.id;
    state.active[j] = false;
  }
  return out;
}

AgglomerationState init_state(std::size_t n, LinkageKind kind) {
  AgglomerationState state;
  state.kind = kind;
  state.n = n;
  state.matrix.assign(n * n, 0.0);
  state.intra.assign(n, 0.0);
  state.active.assign(n, true);
  state.id.resize(n);
  state.size.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) state.id[i] = i;
  return state;
}

}  // namespace

Dendrogram agglomerate_points(const Matrix& points, LinkageKind kind) {
  const std::size_t n = points.rows();
  if (n < 2) fail(ErrorCode::InvalidArgument, "clustering needs at least two items");
  const bool squared = kind == LinkageKind::Centroid || kind == LinkageKind::Ward;
  AgglomerationState state = init_state(n, kind);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d2 = squared_euclidean(points.row(i), points.row(j));
      const double v = squared ? d2 : std::sqrt(d2);
      state.at(i, j) = v;
      state.at(j, i) = v;
    }
  }
  return run_agglomeration(std::move(state));
}

Dendrogram agglomerate_matrix(const Matrix& dissimilarity, LinkageKind kind) {
  if (kind == LinkageKind::Centroid || kind == LinkageKind::Ward)
    fail(ErrorCode::InvalidArgument,
         "centroid and Ward linkage need raw coordinates, not a distance matrix");
  const std::size_t n = dissimilarity.rows();
  if (dissimilarity.cols() != n)
    fail(ErrorCode::InvalidArgument, "dissimilarity matrix must be square");
  if (n < 2) fail(ErrorCode::InvalidArgument, "clustering needs at least two items");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dissimilarity(i, j) != dissimilarity(j, i))
        fail(ErrorCode::InvalidArgument, "dissimilarity matrix must be symmetric");

  AgglomerationState state = init_state(n, kind);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) state.at(i, j) = dissimilarity(i, j);
  return run_agglomeration(std::move(state));
}

std::vector<std::size_t> cut(const Dendrogram& d, std::size_t k) {
  const std::size_t n = d.leaves;
  if (k < 1 || k > n)
    fail(ErrorCode::InvalidArgument, "cluster count must lie in [1, leaf count]");

  // Apply the first n - k merges; leaves then group by their root id.
  std::vector<std::size_t> parent(2 * n - 1);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  for (std::size_t s = 0; s + k < n; ++s) {
    parent[d.steps[s].a] = d.steps[s].id;
    parent[d.steps[s].b] = d.steps[s].id;
  }
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };

  std::vector<std::size_t> labels(n, 0);
  std::map<std::size_t, std::size_t> label_of_root;  // ordered by first leaf
  for (std::size_t leaf = 0; leaf < n; ++leaf) {
    const std::size_t r = root(leaf);
    const auto it = label_of_root.emplace(r, label_of_root.size());
    labels[leaf] = it.first->second;
  }
  return labels;
}

namespace {

std::vector<std::size_t> farthest_first_centers(const Matrix& points, std::size_t k) {
  const std::size_t n = points.rows();
  const std::size_t dim = points.cols();
  std::vector<double> grand(dim, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dim; ++j) grand[j] += points(i, j);
  for (double& g : grand) g /= static_cast<double>(n);

  std::vector<std::size_t> centers;
  std::size_t first = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double d = squared_euclidean(points.row(i), grand);
    if (d < best) {
      best = d;
      first = i;
    }
  }
  centers.push_back(first);

  std::vector<double> min_d2(n, std::numeric_limits<double>::infinity());
  while (centers.size() < k) {
    const std::vector<double> last = points.row(centers.back());
    for (std::size_t i = 0; i < n; ++i)
      min_d2[i] = std::min(min_d2[i], squared_euclidean(points.row(i), last));
    std::size_t arg = 0;
    double far = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (min_d2[i] > far) {
        far = min_d2[i];
        arg = i;
      }
    }
    centers.push_back(arg);
  }
  return centers;
}

}  // namespace

KMeansResult kmeans(const Matrix& points, std::size_t k, const KMeansInit& init,
                    std::size_t max_iter) {
  const std::size_t n = points.rows();
  const std::size_t dim = points.cols();
  if (n == 0) fail(ErrorCode::InvalidArgument, "no points to cluster");
  if (k < 1 || k > n)
    fail(ErrorCode::InvalidArgument, "k must lie in [1, point count]");

  std::vector<std::size_t> seed_idx;
  if (init.kind == KMeansInit::Kind::FarthestFirst) {
    seed_idx = farthest_first_centers(points, k);
  } else {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(init.seed);
    rng.shuffle(order);
    seed_idx.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  }

  Matrix centroids(k, dim);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < dim; ++j) centroids(c, j) = points(seed_idx[c], j);

  auto nearest = [&](std::size_t i) {
    std::size_t arg = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c) {
      const double d = squared_euclidean(points.row(i), centroids.row(c));
      if (d < best) {
        best = d;
        arg = c;
      }
    }
    return arg;
  };

  auto assign_all = [&] {
    std::vector<std::size_t> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = nearest(i);
    return a;
  };

  auto refill_empties = [&](std::vector<std::size_t>& assignment) {
    std::vector<std::size_t> count(k, 0);
    for (std::size_t a : assignment) ++count[a];
    for (std::size_t c = 0; c < k; ++c) {
      if (count[c] > 0) continue;
      std::size_t arg = n;
      double far = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = squared_euclidean(points.row(i), centroids.row(assignment[i]));
        if (d > far) {
          far = d;
          arg = i;
        }
      }
      if (arg == n) continue;  // every point sits on its centroid
      --count[assignment[arg]];
      assignment[arg] = c;
      ++count[c];
      for (std::size_t j = 0; j < dim; ++j) centroids(c, j) = points(arg, j);
    }
  };

  auto update_centroids = [&](const std::vector<std::size_t>& assignment) {
    Matrix sums(k, dim);
    std::vector<std::size_t> count(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++count[assignment[i]];
      for (std::size_t j = 0; j < dim; ++j) sums(assignment[i], j) += points(i, j);
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (count[c] == 0) continue;  // keep the stale centroid
      for (std::size_t j = 0; j < dim; ++j)
        centroids(c, j) = sums(c, j) / static_cast<double>(count[c]);
    }
  };

  auto total_wss = [&](const std::vector<std::size_t>& assignment) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      s += squared_euclidean(points.row(i), centroids.row(assignment[i]));
    return s;
  };

  KMeansResult result;
  std::vector<std::size_t> assignment = assign_all();
  refill_empties(assignment);
  update_centroids(assignment);
  result.wss_history.push_back(total_wss(assignment));
  result.iterations = 1;

  for (std::size_t iter = 1; iter < max_iter; ++iter) {
    std::vector<std::size_t> next = assign_all();
    if (next == assignment) {
      result.converged = true;
      break;
    }
    assignment = std::move(next);
    refill_empties(assignment);
    update_centroids(assignment);
    result.wss_history.push_back(total_wss(assignment));
    ++result.iterations;
  }
  if (!result.converged && max_iter > 0) {
    // One last check: the loop may have exhausted max_iter exactly at
    // the fixed point.
    result.converged = assign_all() == assignment;
  }

  result.centroids = centroids;
  result.assignment = assignment;
  result.wss = total_wss(assignment);
  return result;
}

}  // namespace statkit

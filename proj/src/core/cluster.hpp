// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/dataset.hpp"
#include "core/linalg.hpp"

namespace statkit {

enum class DistanceKind {
  Euclidean,
  Minkowski,             // order c >= 1
  CosineDissimilarity,   // 1 - cos(angle)
  JaccardDissimilarity,  // 1 - shared/union, binary vectors
};

struct DistanceSpec {
  DistanceKind kind = DistanceKind::Euclidean;
  double minkowski_c = 2.0;
};

double distance(const std::vector<double>& p, const std::vector<double>& q,
                const DistanceSpec& spec = {});

// Shared-to-union ratio M11 / (M01 + M10 + M11) over binary vectors.
// Two all-zero vectors count as identical (similarity 1).
double jaccard_similarity(const std::vector<double>& u, const std::vector<double>& v);

// Association between two columns of matching kind: Pearson for
// numeric pairs, rank (midrank) correlation for ordinal pairs, and
// sqrt(chi-square / N) for nominal pairs. Rows missing either value
// are dropped.
double variable_similarity(const Column& a, const Column& b);

enum class LinkageKind {
  Single,
  Complete,
  AverageBetween,
  AverageWithin,
  Centroid,
  Ward,
};

const char* linkage_name(LinkageKind kind);

struct MergeStep {
  std::size_t a = 0;       // smaller cluster id of the merged pair
  std::size_t b = 0;
  double height = 0.0;     // linkage dissimilarity at the merge
  std::size_t id = 0;      // id of the new cluster (leaves are 0..N-1)
  std::size_t size = 0;    // member count of the new cluster
};

struct Dendrogram {
  std::size_t leaves = 0;
  std::vector<MergeStep> steps;  // exactly leaves - 1 merges
};

// Agglomerates rows of `points` (Euclidean geometry). Each merge takes
// the globally smallest current inter-cluster dissimilarity, breaking
// ties toward the lexicographically smallest id pair. Ward reports the
// increase in total within-cluster sum of squares; Centroid reports
// the distance between centroids.
Dendrogram agglomerate_points(const Matrix& points, LinkageKind kind);

// Same over a precomputed symmetric dissimilarity matrix. Ward and
// Centroid are rejected here: they need raw coordinates.
Dendrogram agglomerate_matrix(const Matrix& dissimilarity, LinkageKind kind);

// Partition into k clusters by undoing the last k-1 merges. Labels are
// assigned in order of each cluster's smallest member index.
std::vector<std::size_t> cut(const Dendrogram& d, std::size_t k);

struct KMeansInit {
  enum class Kind { FarthestFirst, SeededRandom } kind = Kind::FarthestFirst;
  std::uint64_t seed = 0;
};

struct KMeansResult {
  Matrix centroids;                  // k x dim
  std::vector<std::size_t> assignment;
  double wss = 0.0;                  // sum of squared point-centroid gaps
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> wss_history;   // one entry per Lloyd iteration
};

// Lloyd iterations with Euclidean assignment. FarthestFirst seeding:
// first center is the point nearest the grand mean, each next center
// maximizes its distance to the chosen ones (ties toward the lowest
// index). An emptied cluster is refilled with the point farthest from
// its centroid.
KMeansResult kmeans(const Matrix& points, std::size_t k, const KMeansInit& init = {},
                    std::size_t max_iter = 100);

}  // namespace statkit

// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#include "core/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace statkit {

LabeledDataset labeled(const Dataset& data, const std::string& class_column) {
  const Column& label = data.column(class_column);
  if (label.kind != VariableKind::Nominal && label.kind != VariableKind::Ordinal)
    fail(ErrorCode::InvalidArgument,
         "class column '" + class_column + "' must be nominal or ordinal");
  if (data.row_count() < 2)
    fail(ErrorCode::InvalidArgument, "training needs at least two rows");
  if (label.missing_count() > 0)
    fail(ErrorCode::Data, "class column '" + class_column + "' has missing values");
  return LabeledDataset{data, label};
}

namespace {

std::size_t level_rank(const std::vector<std::string>& levels, const std::string& s) {
  const auto it = std::find(levels.begin(), levels.end(), s);
  return static_cast<std::size_t>(it - levels.begin());
}

// Count of cuts strictly below v; bin i covers (cuts[i-1], cuts[i]].
std::size_t bin_index(const std::vector<double>& cuts, double v) {
  return static_cast<std::size_t>(
      std::lower_bound(cuts.begin(), cuts.end(), v) - cuts.begin());
}

// Equal-frequency boundaries at indices round(j*n/bins); a boundary
// inside a run of equal values slides forward past the run.
std::vector<double> equal_frequency_cuts(const std::vector<double>& sorted,
                                         std::size_t bins) {
  const std::size_t n = sorted.size();
  std::vector<double> cuts;
  for (std::size_t j = 1; j < bins; ++j) {
    auto b = static_cast<std::size_t>(std::llround(
        static_cast<double>(j) * static_cast<double>(n) / static_cast<double>(bins)));
    if (b < 1) b = 1;
    while (b < n && sorted[b - 1] == sorted[b]) ++b;
    if (b >= n) continue;
    const double cut = 0.5 * (sorted[b - 1] + sorted[b]);
    if (cuts.empty() || cut > cuts.back()) cuts.push_back(cut);
  }
  return cuts;
}

struct ClassCounts {
  std::map<std::string, std::size_t> counts;

  void add(const std::string& cls) { ++counts[cls]; }

  // Majority with deterministic ties: higher global count first, then
  // earlier class level order.
  std::string majority(const std::map<std::string, std::size_t>& global,
                       const std::vector<std::string>& levels) const {
    std::string best;
    std::size_t best_count = 0, best_global = 0, best_rank = 0;
    for (const auto& [cls, count] : counts) {
      const std::size_t g = global.at(cls);
      const std::size_t r = level_rank(levels, cls);
      if (best.empty() || count > best_count ||
          (count == best_count &&
           (g > best_global || (g == best_global && r < best_rank)))) {
        best = cls;
        best_count = count;
        best_global = g;
        best_rank = r;
      }
    }
    return best;
  }
};

}  // namespace

OneRRule train_oner(const LabeledDataset& train, std::size_t bins) {
  if (bins < 1) fail(ErrorCode::InvalidArgument, "bin count must be at least 1");
  const Dataset& data = train.data;
  const Column& cls = train.label;
  const std::size_t n = data.row_count();

  std::map<std::string, std::size_t> global;
  for (std::size_t i = 0; i < n; ++i) ++global[cls.labels[i]];

  std::string default_class;
  std::size_t default_count = 0;
  for (const std::string& level : cls.levels) {
    const auto it = global.find(level);
    const std::size_t c = it == global.end() ? 0 : it->second;
    if (default_class.empty() || c > default_count) {
      default_class = level;
      default_count = c;
    }
  }

  bool any_attribute = false;
  OneRRule best;
  std::size_t best_misses = 0, best_distinct = 0;

  for (const Column& col : data.columns) {
    if (&col == &cls) continue;
    any_attribute = true;

    OneRRule rule;
    rule.attribute = col.name;
    rule.default_class = default_class;
    rule.numeric_attribute = col.is_numeric();

    if (col.missing_count() == col.size())
      fail(ErrorCode::Data, "attribute '" + col.name + "' has no observed values");

    std::vector<ClassCounts> numeric_buckets;
    std::map<std::string, ClassCounts> label_buckets;
    if (rule.numeric_attribute) {
      std::vector<double> sorted = col.numeric_values();
      std::sort(sorted.begin(), sorted.end());
      rule.cuts = equal_frequency_cuts(sorted, bins);
      numeric_buckets.resize(rule.cuts.size() + 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (col.missing[i]) continue;
        numeric_buckets[bin_index(rule.cuts, col.numeric[i])].add(cls.labels[i]);
      }
      rule.bin_classes.reserve(numeric_buckets.size());
      for (const ClassCounts& bucket : numeric_buckets) {
        rule.bin_classes.push_back(bucket.counts.empty()
                                       ? default_class
                                       : bucket.majority(global, cls.levels));
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (col.missing[i]) continue;
        label_buckets[col.labels[i]].add(cls.labels[i]);
      }
      for (const auto& [value, bucket] : label_buckets)
        rule.label_classes[value] = bucket.majority(global, cls.levels);
    }

    std::size_t misses = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (predict_oner(rule, data, i).label != cls.labels[i]) ++misses;
    rule.training_error = static_cast<double>(misses) / static_cast<double>(n);

    const std::size_t distinct =
        rule.numeric_attribute ? rule.bin_classes.size() : rule.label_classes.size();
    if (best.attribute.empty() || misses < best_misses ||
        (misses == best_misses && distinct < best_distinct)) {
      best = rule;
      best_misses = misses;
      best_distinct = distinct;
    }
  }

  if (!any_attribute)
    fail(ErrorCode::InvalidArgument, "training needs at least one non-class attribute");
  return best;
}

Prediction predict_oner(const OneRRule& rule, const CellValue& value) {
  Prediction out;
  if (value.missing) {
    out.label = rule.default_class;
    out.used_default = true;
    out.missing_input = true;
    return out;
  }
  if (rule.numeric_attribute) {
    if (!value.numeric)
      fail(ErrorCode::InvalidArgument,
           "rule on '" + rule.attribute + "' expects a numeric value");
    out.label = rule.bin_classes[bin_index(rule.cuts, value.number)];
    return out;
  }
  if (value.numeric)
    fail(ErrorCode::InvalidArgument,
         "rule on '" + rule.attribute + "' expects a categorical value");
  const auto it = rule.label_classes.find(value.label);
  if (it == rule.label_classes.end()) {
    out.label = rule.default_class;
    out.used_default = true;
    return out;
  }
  out.label = it->second;
  return out;
}

Prediction predict_oner(const OneRRule& rule, const Dataset& data, std::size_t row) {
  const Column& col = data.column(rule.attribute);
  if (row >= col.size()) fail(ErrorCode::InvalidArgument, "row index out of range");
  CellValue value;
  value.missing = col.missing[row];
  value.numeric = col.is_numeric();
  if (!value.missing) {
    if (value.numeric) value.number = col.numeric[row];
    else value.label = col.labels[row];
  }
  return predict_oner(rule, value);
}

std::string knn_predict(const LabeledDataset& train, const std::vector<double>& query,
                        std::size_t k, const DistanceSpec& metric) {
  const Dataset& data = train.data;
  const Column& cls = train.label;
  const std::size_t n = data.row_count();

  std::vector<const Column*> features;
  for (const Column& col : data.columns) {
    if (&col == &cls) continue;
    if (!col.is_numeric())
      fail(ErrorCode::InvalidArgument,
           "nearest-neighbour prediction needs numeric attributes; '" + col.name +
               "' is not numeric");
    if (col.missing_count() > 0)
      fail(ErrorCode::Data, "attribute '" + col.name + "' has missing values");
    features.push_back(&col);
  }
  if (features.empty())
    fail(ErrorCode::InvalidArgument, "training needs at least one non-class attribute");
  if (query.size() != features.size())
    fail(ErrorCode::InvalidArgument, "query has wrong dimension");
  if (k < 1 || k > n)
    fail(ErrorCode::InvalidArgument, "k must lie in [1, training row count]");

  std::vector<std::pair<double, std::size_t>> ranked(n);
  std::vector<double> point(features.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < features.size(); ++j) point[j] = features[j]->numeric[i];
    ranked[i] = {distance(query, point, metric), i};
  }
  std::sort(ranked.begin(), ranked.end());

  std::map<std::string, std::pair<std::size_t, double>> votes;  // count, summed distance
  for (std::size_t r = 0; r < k; ++r) {
    auto& v = votes[cls.labels[ranked[r].second]];
    ++v.first;
    v.second += ranked[r].first;
  }

  std::string best;
  std::size_t best_count = 0, best_rank = 0;
  double best_sum = 0.0;
  for (const auto& [label, v] : votes) {
    const std::size_t r = level_rank(cls.levels, label);
    if (best.empty() || v.first > best_count ||
        (v.first == best_count &&
         (v.second < best_sum || (v.second == best_sum && r < best_rank)))) {
      best = label;
      best_count = v.first;
      best_sum = v.second;
      best_rank = r;
    }
  }
  return best;
}

}  // namespace statkit

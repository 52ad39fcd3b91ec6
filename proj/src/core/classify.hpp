// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0
//
// Single-attribute rule induction and nearest-neighbour prediction.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "core/cluster.hpp"
#include "core/dataset.hpp"

namespace statkit {

// View of a dataset with one column designated as the class label.
struct LabeledDataset {
  const Dataset& data;
  const Column& label;
};

// Validates: column exists, is nominal or ordinal, has no missing
// values, and the dataset has at least two rows.
LabeledDataset labeled(const Dataset& data, const std::string& class_column);

// One-attribute classifier: a value-to-class map over the single
// attribute that misclassifies the fewest training rows.
struct OneRRule {
  std::string attribute;
  bool numeric_attribute = false;
  std::vector<double> cuts;          // ascending; bin i covers (cuts[i-1], cuts[i]]
  std::vector<std::string> bin_classes;              // numeric attribute: class per bin
  std::map<std::string, std::string> label_classes;  // categorical: class per value
  std::string default_class;         // overall majority class
  double training_error = 0.0;       // misclassified / total on the training set
};

// Numeric attributes are discretized into equal-frequency bins first.
// Ties: bucket majority -> globally more frequent class, then class
// level order; attribute choice -> fewest distinct values, then column
// order.
OneRRule train_oner(const LabeledDataset& train, std::size_t bins = 4);

// One attribute cell handed to the rule at prediction time.
struct CellValue {
  bool missing = false;
  bool numeric = false;
  double number = 0.0;
  std::string label;
};

struct Prediction {
  std::string label;
  bool used_default = false;  // unseen value or missing input
  bool missing_input = false;
};

Prediction predict_oner(const OneRRule& rule, const CellValue& value);
Prediction predict_oner(const OneRRule& rule, const Dataset& data, std::size_t row);

// Majority class among the k nearest training rows. All non-class
// columns must be numeric and complete. Vote ties resolve to the class
// with the smaller summed distance, then class level order.
std::string knn_predict(const LabeledDataset& train, const std::vector<double>& query,
                        std::size_t k = 1, const DistanceSpec& metric = {});

}  // namespace statkit

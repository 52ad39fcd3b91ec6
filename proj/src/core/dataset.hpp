// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace statkit {

enum class VariableKind { Nominal, Ordinal, Discrete, Continuous };

const char* variable_kind_name(VariableKind kind);

// One observed variable. Numeric kinds store doubles in `numeric`;
// categorical kinds store labels in `labels`. Entries flagged in
// `missing` carry no value and are excluded from every statistic.
struct Column {
  std::string name;
  VariableKind kind = VariableKind::Nominal;
  std::vector<double> numeric;
  std::vector<std::string> labels;
  // Category labels in display order: declared order for Ordinal,
  // order of first appearance for Nominal. Empty for numeric kinds.
  std::vector<std::string> levels;
  std::vector<bool> missing;

  std::size_t size() const { return missing.size(); }
  bool is_numeric() const {
    return kind == VariableKind::Discrete || kind == VariableKind::Continuous;
  }
  std::size_t missing_count() const;
  // Non-missing values in row order.
  std::vector<double> numeric_values() const;
  std::vector<std::string> label_values() const;
};

struct Dataset {
  std::vector<Column> columns;

  std::size_t row_count() const {
    return columns.empty() ? 0 : columns.front().size();
  }
  std::size_t column_count() const { return columns.size(); }
  bool has_column(const std::string& name) const;
  const Column& column(const std::string& name) const;
};

struct SchemaEntry {
  std::string column;
  VariableKind kind = VariableKind::Nominal;
  std::vector<std::string> levels;  // Ordinal only
};
using Schema = std::vector<SchemaEntry>;

// Loads a comma-separated file: UTF-8, first row is the header, empty
// cell means missing, decimal point is '.'. Kinds come from the schema
// when given; otherwise they are inferred per column (all-integer
// numeric -> Discrete, numeric with fractions -> Continuous, anything
// else -> Nominal).
Dataset load_csv(const std::string& path, const Schema& schema = {});

// Same parser over an in-memory buffer (used by tests and the loader).
Dataset load_csv_text(const std::string& text, const Schema& schema = {},
                      const std::string& origin = "<memory>");

// Parses a compact schema string: "col=kind;col=ordinal(a<b<c);...".
// Kind names: nominal, ordinal, discrete, continuous.
Schema parse_schema(const std::string& text);

enum class FrequencyKey { Category, Value, Interval };

struct FrequencyRow {
  FrequencyKey key_kind = FrequencyKey::Category;
  std::string category;     // Category rows
  double value = 0.0;       // Value rows
  double lo = 0.0;          // Interval rows: (lo, hi]
  double hi = 0.0;
  std::size_t count = 0;               // n
  std::size_t cumulative = 0;          // N
  double relative = 0.0;               // f
  double cumulative_relative = 0.0;    // F
};

struct FrequencyTable {
  std::vector<FrequencyRow> rows;
  std::size_t total = 0;
};

// Half-open binning (lo, hi]: a value equal to a boundary joins the bin
// whose upper edge it equals.
struct BinSpec {
  double lower = 0.0;
  double width = 0.0;
  std::size_t count = 0;
};

// One row per distinct value. Nominal rows are ordered by descending
// count, then first appearance; Ordinal rows follow the declared level
// order; Discrete rows ascend numerically. Continuous columns are
// rejected (bin them first).
FrequencyTable frequency_table(const Column& col);

FrequencyTable binned_frequency_table(const Column& col, const BinSpec& bins);

}  // namespace statkit

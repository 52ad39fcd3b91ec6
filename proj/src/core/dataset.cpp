// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#include "core/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "core/errors.hpp"

namespace statkit {

const char* variable_kind_name(VariableKind kind) {
  switch (kind) {
    case VariableKind::Nominal: return "nominal";
    case VariableKind::Ordinal: return "ordinal";
    case VariableKind::Discrete: return "discrete";
    case VariableKind::Continuous: return "continuous";
  }
  return "unknown";
}

std::size_t Column::missing_count() const {
  return static_cast<std::size_t>(std::count(missing.begin(), missing.end(), true));
}

std::vector<double> Column::numeric_values() const {
  std::vector<double> out;
  out.reserve(numeric.size());
  for (std::size_t i = 0; i < missing.size(); ++i)
    if (!missing[i]) out.push_back(numeric[i]);
  return out;
}

std::vector<std::string> Column::label_values() const {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (std::size_t i = 0; i < missing.size(); ++i)
    if (!missing[i]) out.push_back(labels[i]);
  return out;
}

bool Dataset::has_column(const std::string& name) const {
  for (const Column& c : columns)
    if (c.name == name) return true;
  return false;
}

const Column& Dataset::column(const std::string& name) const {
  for (const Column& c : columns)
    if (c.name == name) return c;
  fail(ErrorCode::Data, "no column named '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_finite_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const char* begin = t.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + t.size()) return false;
  if (!std::isfinite(v)) return false;
  out = v;
  return true;
}

// Splits CSV text into rows of cells. Double-quoted cells may contain
// commas, doubled quotes, and newlines.
std::vector<std::vector<std::string>> parse_csv_cells(const std::string& text,
                                                      const std::string& origin) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  bool cell_started = false;

  auto end_cell = [&] {
    row.push_back(cell);
    cell.clear();
    cell_started = false;
  };
  auto end_row = [&] {
    end_cell();
    rows.push_back(std::move(row));
    row.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(ch);
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (!cell_started && cell.empty()) {
          quoted = true;
          cell_started = true;
        } else {
          cell.push_back(ch);
        }
        break;
      case ',':
        end_cell();
        break;
      case '\n':
        end_row();
        break;
      case '\r':
        break;  // tolerate CRLF
      default:
        cell.push_back(ch);
        cell_started = true;
    }
  }
  if (quoted) fail(ErrorCode::Data, origin + ": unterminated quoted cell");
  if (cell_started || !cell.empty() || !row.empty()) end_row();
  return rows;
}

VariableKind infer_kind(const std::vector<std::string>& cells,
                        const std::vector<bool>& missing) {
  bool any = false;
  bool all_numeric = true;
  bool all_integral = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (missing[i]) continue;
    any = true;
    double v = 0.0;
    if (!parse_finite_double(cells[i], v)) {
      all_numeric = false;
      break;
    }
    if (std::floor(v) != v) all_integral = false;
  }
  if (!any || !all_numeric) return VariableKind::Nominal;
  return all_integral ? VariableKind::Discrete : VariableKind::Continuous;
}

}  // namespace

Schema parse_schema(const std::string& text) {
  Schema schema;
  std::stringstream ss(text);
  std::string entry;
  while (std::getline(ss, entry, ';')) {
    entry = trim(entry);
    if (entry.empty()) continue;
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::Config, "schema entry '" + entry + "' is not name=kind");
    SchemaEntry se;
    se.column = trim(entry.substr(0, eq));
    std::string kind = trim(entry.substr(eq + 1));
    if (se.column.empty())
      fail(ErrorCode::Config, "schema entry '" + entry + "' has an empty column name");
    const std::size_t paren = kind.find('(');
    std::string levels_text;
    if (paren != std::string::npos) {
      if (kind.back() != ')')
        fail(ErrorCode::Config, "schema entry '" + entry + "': missing ')'");
      levels_text = kind.substr(paren + 1, kind.size() - paren - 2);
      kind = trim(kind.substr(0, paren));
    }
    if (kind == "nominal") {
      se.kind = VariableKind::Nominal;
    } else if (kind == "ordinal") {
      se.kind = VariableKind::Ordinal;
      std::stringstream ls(levels_text);
      std::string level;
      while (std::getline(ls, level, '<')) {
        level = trim(level);
        if (!level.empty()) se.levels.push_back(level);
      }
      if (se.levels.size() < 2)
        fail(ErrorCode::Config,
             "ordinal column '" + se.column + "' needs at least two levels, e.g. ordinal(low<high)");
    } else if (kind == "discrete") {
      se.kind = VariableKind::Discrete;
    } else if (kind == "continuous") {
      se.kind = VariableKind::Continuous;
    } else {
      fail(ErrorCode::Config, "unknown variable kind '" + kind + "' for column '" + se.column + "'");
    }
    schema.push_back(std::move(se));
  }
  return schema;
}

Dataset load_csv_text(const std::string& text, const Schema& schema,
                      const std::string& origin) {
  const auto cells = parse_csv_cells(text, origin);
  if (cells.empty()) fail(ErrorCode::Data, origin + ": empty file, header row required");

  const std::vector<std::string>& header = cells.front();
  const std::size_t ncol = header.size();
  {
    std::set<std::string> seen;
    for (const std::string& raw : header) {
      const std::string name = trim(raw);
      if (name.empty()) fail(ErrorCode::Data, origin + ": empty column name in header");
      if (!seen.insert(name).second)
        fail(ErrorCode::Data, origin + ": duplicate column name '" + name + "'");
    }
  }
  std::vector<const std::vector<std::string>*> body;
  for (std::size_t r = 1; r < cells.size(); ++r) {
    // Tolerate fully blank lines (except in 1-column files, where an
    // empty cell is a legitimate missing value).
    if (ncol != 1 && cells[r].size() == 1 && trim(cells[r][0]).empty()) continue;
    if (cells[r].size() != ncol)
      fail(ErrorCode::Data, origin + ": row " + std::to_string(r + 1) + " has " +
                                std::to_string(cells[r].size()) + " cells, expected " +
                                std::to_string(ncol));
    body.push_back(&cells[r]);
  }
  for (const SchemaEntry& se : schema) {
    bool found = false;
    for (const std::string& raw : header)
      if (trim(raw) == se.column) found = true;
    if (!found)
      fail(ErrorCode::Config, origin + ": schema column '" + se.column + "' not in header");
  }

  const std::size_t nrow = body.size();
  Dataset ds;
  ds.columns.reserve(ncol);

  for (std::size_t c = 0; c < ncol; ++c) {
    Column col;
    col.name = trim(header[c]);
    std::vector<std::string> raw(nrow);
    col.missing.assign(nrow, false);
    for (std::size_t r = 0; r < nrow; ++r) {
      raw[r] = trim((*body[r])[c]);
      if (raw[r].empty()) col.missing[r] = true;
    }

    const SchemaEntry* se = nullptr;
    for (const SchemaEntry& e : schema)
      if (e.column == col.name) se = &e;
    col.kind = se ? se->kind : infer_kind(raw, col.missing);

    if (col.kind == VariableKind::Discrete || col.kind == VariableKind::Continuous) {
      col.numeric.assign(nrow, 0.0);
      col.labels.assign(nrow, "");
      for (std::size_t r = 0; r < nrow; ++r) {
        if (col.missing[r]) continue;
        double v = 0.0;
        if (!parse_finite_double(raw[r], v))
          fail(ErrorCode::Data, origin + ": column '" + col.name + "' row " +
                                    std::to_string(r + 2) + ": non-numeric value '" + raw[r] +
                                    "' in a declared numeric column");
        col.numeric[r] = v;
        col.labels[r] = raw[r];
      }
    } else {
      col.labels = raw;
      col.numeric.assign(nrow, 0.0);
      if (col.kind == VariableKind::Ordinal) {
        col.levels = se->levels;
        for (std::size_t r = 0; r < nrow; ++r) {
          if (col.missing[r]) continue;
          if (std::find(col.levels.begin(), col.levels.end(), raw[r]) == col.levels.end())
            fail(ErrorCode::Data, origin + ": column '" + col.name + "' row " +
                                      std::to_string(r + 2) + ": value '" + raw[r] +
                                      "' is not a declared ordinal level");
        }
      } else {
        for (std::size_t r = 0; r < nrow; ++r) {
          if (col.missing[r]) continue;
          if (std::find(col.levels.begin(), col.levels.end(), raw[r]) == col.levels.end())
            col.levels.push_back(raw[r]);
        }
      }
    }
    ds.columns.push_back(std::move(col));
  }
  return ds;
}

Dataset load_csv(const std::string& path, const Schema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(ErrorCode::Io, "read failure on '" + path + "'");
  return load_csv_text(buffer.str(), schema, path);
}

namespace {

void finalize_table(FrequencyTable& table) {
  std::size_t running = 0;
  for (FrequencyRow& row : table.rows) {
    running += row.count;
    row.cumulative = running;
    row.relative = table.total == 0
                       ? 0.0
                       : static_cast<double>(row.count) / static_cast<double>(table.total);
    row.cumulative_relative =
        table.total == 0 ? 0.0
                         : static_cast<double>(row.cumulative) / static_cast<double>(table.total);
  }
}

}  // namespace

FrequencyTable frequency_table(const Column& col) {
  if (col.kind == VariableKind::Continuous)
    fail(ErrorCode::InvalidArgument,
         "column '" + col.name + "' is continuous; bin it before tabulating");

  FrequencyTable table;
  if (col.kind == VariableKind::Discrete) {
    std::map<double, std::size_t> counts;
    for (double v : col.numeric_values()) ++counts[v];
    for (const auto& [value, count] : counts) {
      FrequencyRow row;
      row.key_kind = FrequencyKey::Value;
      row.value = value;
      row.count = count;
      table.rows.push_back(row);
      table.total += count;
    }
  } else {
    // Count per level; levels are already in display order.
    std::vector<std::size_t> counts(col.levels.size(), 0);
    for (const std::string& v : col.label_values()) {
      const auto it = std::find(col.levels.begin(), col.levels.end(), v);
      ++counts[static_cast<std::size_t>(it - col.levels.begin())];
    }
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < counts.size(); ++i)
      if (counts[i] > 0) order.push_back(i);
    if (col.kind == VariableKind::Nominal) {
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return counts[a] > counts[b];  // ties keep first-appearance order
      });
    }
    for (std::size_t i : order) {
      FrequencyRow row;
      row.key_kind = FrequencyKey::Category;
      row.category = col.levels[i];
      row.count = counts[i];
      table.rows.push_back(row);
      table.total += counts[i];
    }
  }
  finalize_table(table);
  return table;
}

FrequencyTable binned_frequency_table(const Column& col, const BinSpec& bins) {
  if (!col.is_numeric())
    fail(ErrorCode::InvalidArgument, "column '" + col.name + "' is categorical; binning needs numbers");
  if (!(bins.width > 0.0) || bins.count < 1)
    fail(ErrorCode::InvalidArgument, "bin spec needs width > 0 and count >= 1");

  std::vector<double> edges(bins.count + 1);
  for (std::size_t i = 0; i <= bins.count; ++i)
    edges[i] = bins.lower + static_cast<double>(i) * bins.width;

  std::vector<std::size_t> counts(bins.count, 0);
  for (double v : col.numeric_values()) {
    const auto it = std::lower_bound(edges.begin(), edges.end(), v);
    const std::size_t k = static_cast<std::size_t>(it - edges.begin());
    if (k == 0 || k > bins.count)
      fail(ErrorCode::Data, "value " + std::to_string(v) + " in column '" + col.name +
                                "' falls outside the bin coverage (" + std::to_string(edges.front()) +
                                ", " + std::to_string(edges.back()) + "]");
    ++counts[k - 1];
  }

  FrequencyTable table;
  for (std::size_t i = 0; i < bins.count; ++i) {
    FrequencyRow row;
    row.key_kind = FrequencyKey::Interval;
    row.lo = edges[i];
    row.hi = edges[i + 1];
    row.count = counts[i];
    table.rows.push_back(row);
    table.total += counts[i];
  }
  finalize_table(table);
  return table;
}

}  // namespace statkit

// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0

#include "core/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "core/classify.hpp"
#include "core/cluster.hpp"
#include "core/descriptive.hpp"
#include "core/errors.hpp"
#include "core/factor.hpp"
#include "core/inference.hpp"
#include "core/regression.hpp"

namespace statkit {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size())
    fail(ErrorCode::Config, what + " must be a number, got '" + s + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  char* end = nullptr;
  const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
  if (t.empty() || t[0] == '-' || end != t.c_str() + t.size())
    fail(ErrorCode::Config, what + " must be an unsigned integer, got '" + s + "'");
  return static_cast<std::uint64_t>(v);
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  return static_cast<std::size_t>(parse_u64(s, what));
}

// Report tables print 4 significant digits; the JSON payloads keep
// full precision.
std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& values) {
  if (values.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += fmt(values[i]);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

class TableWriter {
 public:
  explicit TableWriter(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::string out = line(header_);
    std::vector<std::string> rule(header_.size(), "---");
    out += line(rule);
    for (const auto& row : rows_) out += line(row);
    return out;
  }

 private:
  static std::string line(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) out += " " + c + " |";
    out += "\n";
    return out;
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

const std::map<std::string, std::set<std::string>>& section_keys() {
  static const std::map<std::string, std::set<std::string>> kKeys = {
      {"frequencies", {"column", "lower", "width", "bins", "chart"}},
      {"summary", {"column", "chart"}},
      {"test",
       {"kind", "column", "column2", "mu0", "sigma", "sigma0", "p0", "successes",
        "trials", "tail", "alpha", "population"}},
      {"regression", {"response", "predictors"}},
      {"efa", {"columns", "factors", "retain", "extraction", "rotation", "chart"}},
      {"reliability", {"columns"}},
      {"cluster", {"columns", "method", "linkage", "k", "distance", "init", "chart"}},
      {"classify", {"class", "method", "bins", "k", "query", "distance"}},
  };
  return kKeys;
}

}  // namespace

PipelineConfig parse_config_text(const std::string& text, const std::string& origin) {
  PipelineConfig config;
  std::map<std::string, std::string> globals;
  std::optional<std::size_t> current;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  auto where = [&] { return origin + ":" + std::to_string(lineno); };

  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        fail(ErrorCode::Config, where() + ": unterminated section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (section_keys().find(name) == section_keys().end())
        fail(ErrorCode::Config, where() + ": unknown section [" + name + "]");
      config.sections.push_back({name, {}, lineno});
      current = config.sections.size() - 1;
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::Config, where() + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(ErrorCode::Config, where() + ": empty key");

    if (current) {
      AnalysisSection& sec = config.sections[*current];
      const auto& allowed = section_keys().at(sec.name);
      if (allowed.find(key) == allowed.end())
        fail(ErrorCode::Config,
             where() + ": unknown key '" + key + "' in [" + sec.name + "]");
      if (!sec.keys.emplace(key, value).second)
        fail(ErrorCode::Config, where() + ": duplicate key '" + key + "'");
    } else {
      static const std::set<std::string> kGlobals = {"input", "output", "schema",
                                                     "alpha", "seed"};
      if (kGlobals.find(key) == kGlobals.end())
        fail(ErrorCode::Config, where() + ": unknown key '" + key + "'");
      if (!globals.emplace(key, value).second)
        fail(ErrorCode::Config, where() + ": duplicate key '" + key + "'");
    }
  }

  const auto it = globals.find("input");
  if (it == globals.end())
    fail(ErrorCode::Config, origin + ": missing required key 'input'");
  config.input = it->second;
  if (globals.count("output")) config.output = globals.at("output");
  if (globals.count("schema")) config.schema = globals.at("schema");
  if (globals.count("alpha")) {
    config.alpha = parse_double(globals.at("alpha"), "alpha");
    if (!(config.alpha > 0.0 && config.alpha < 1.0))
      fail(ErrorCode::Config, "alpha must lie strictly between 0 and 1");
  }
  if (globals.count("seed")) config.seed = parse_u64(globals.at("seed"), "seed");
  return config;
}

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(ErrorCode::Io, "cannot read config file '" + path + "'");
  return parse_config_text(buffer.str(), path);
}

namespace {

// --- shared section helpers ---------------------------------------

const std::string& require_key(const AnalysisSection& sec, const std::string& key) {
  const auto it = sec.keys.find(key);
  if (it == sec.keys.end())
    fail(ErrorCode::Config, "[" + sec.name + "] needs key '" + key + "'");
  return it->second;
}

std::string optional_key(const AnalysisSection& sec, const std::string& key,
                         const std::string& fallback) {
  const auto it = sec.keys.find(key);
  return it == sec.keys.end() ? fallback : it->second;
}

const Column& config_column(const Dataset& data, const std::string& name) {
  if (!data.has_column(name))
    fail(ErrorCode::Config, "config references unknown column '" + name + "'");
  return data.column(name);
}

const Column& numeric_column(const Dataset& data, const std::string& name) {
  const Column& col = config_column(data, name);
  if (!col.is_numeric())
    fail(ErrorCode::Config, "column '" + name + "' is not numeric");
  return col;
}

Tail parse_tail(const std::string& s) {
  if (s == "left") return Tail::Left;
  if (s == "right") return Tail::Right;
  if (s == "two") return Tail::Two;
  fail(ErrorCode::Config, "tail must be left, right or two, got '" + s + "'");
}

DistanceSpec parse_distance(const std::string& s) {
  DistanceSpec spec;
  if (s == "euclidean") {
    spec.kind = DistanceKind::Euclidean;
  } else if (s == "cosine") {
    spec.kind = DistanceKind::CosineDissimilarity;
  } else if (s == "jaccard") {
    spec.kind = DistanceKind::JaccardDissimilarity;
  } else if (s.rfind("minkowski:", 0) == 0) {
    spec.kind = DistanceKind::Minkowski;
    spec.minkowski_c = parse_double(s.substr(10), "minkowski order");
  } else {
    fail(ErrorCode::Config,
         "distance must be euclidean, minkowski:<c>, cosine or jaccard, got '" + s +
             "'");
  }
  return spec;
}

// Rows where every listed column has a value, in row order.
std::vector<std::size_t> complete_rows(const std::vector<const Column*>& cols) {
  const std::size_t n = cols.empty() ? 0 : cols.front()->size();
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    for (const Column* c : cols)
      if (c->missing[i]) {
        ok = false;
        break;
      }
    if (ok) rows.push_back(i);
  }
  return rows;
}

Matrix gather(const std::vector<const Column*>& cols,
              const std::vector<std::size_t>& rows) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(i, j) = cols[j]->numeric[rows[i]];
  return out;
}

std::vector<const Column*> resolve_numeric(const Dataset& data,
                                           const std::vector<std::string>& names) {
  std::vector<const Column*> cols;
  for (const std::string& name : names) cols.push_back(&numeric_column(data, name));
  return cols;
}

struct ChartSink {
  std::vector<std::pair<std::string, std::string>>& charts;

  std::string add(const std::string& kind, const json& payload) {
    char name[48];
    std::snprintf(name, sizeof(name), "%02zu-%s.json", charts.size() + 1,
                  kind.c_str());
    charts.emplace_back(name, payload.dump(2) + "\n");
    return name;
  }
};

std::string chart_note(const std::string& filename) {
  return "Chart: `charts/" + filename + "`\n\n";
}

std::string key_label(const FrequencyRow& row) {
  switch (row.key_kind) {
    case FrequencyKey::Category: return row.category;
    case FrequencyKey::Value: return fmt(row.value);
    case FrequencyKey::Interval:
      return "(" + fmt(row.lo) + ", " + fmt(row.hi) + "]";
  }
  return "?";
}

// --- [frequencies] --------------------------------------------------

// Default binning: ceil(sqrt(n)) equal-width right-closed bins. The
// lower edge is nudged below the minimum and the width slightly
// stretched so both extremes land strictly inside the covered range.
BinSpec default_bins(const std::vector<double>& values) {
  BinSpec spec;
  const double lo = *std::min_element(values.begin(), values.end());
  const double hi = *std::max_element(values.begin(), values.end());
  const double span = hi - lo;
  if (span == 0.0) {
    spec.lower = lo - 0.5;
    spec.width = 1.0;
    spec.count = 1;
    return spec;
  }
  spec.count = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(values.size()))));
  spec.lower = lo - span * 0x1p-20;
  spec.width = (hi - spec.lower) * (1.0 + 0x1p-20) / static_cast<double>(spec.count);
  return spec;
}

std::string render_frequencies(const Dataset& data, const AnalysisSection& sec,
                               ChartSink& sink) {
  const Column& col = config_column(data, require_key(sec, "column"));
  const bool has_bin_keys =
      sec.keys.count("lower") || sec.keys.count("width") || sec.keys.count("bins");

  FrequencyTable table;
  bool binned = false;
  if (col.is_numeric() &&
      (col.kind == VariableKind::Continuous || has_bin_keys)) {
    BinSpec spec;
    if (has_bin_keys) {
      spec.lower = parse_double(require_key(sec, "lower"), "lower");
      spec.width = parse_double(require_key(sec, "width"), "width");
      spec.count = parse_size(require_key(sec, "bins"), "bins");
      if (spec.width <= 0.0) fail(ErrorCode::Config, "width must be positive");
      if (spec.count < 1) fail(ErrorCode::Config, "bins must be at least 1");
    } else {
      const std::vector<double> values = col.numeric_values();
      if (values.empty())
        fail(ErrorCode::Data, "column '" + col.name + "' has no observed values");
      spec = default_bins(values);
    }
    table = binned_frequency_table(col, spec);
    binned = true;
  } else {
    if (has_bin_keys)
      fail(ErrorCode::Config, "bin keys apply only to numeric columns");
    table = frequency_table(col);
  }

  std::string md = "## Frequencies: " + col.name + "\n\n";
  TableWriter t({"value", "n", "N", "f", "F"});
  for (const FrequencyRow& row : table.rows)
    t.add({key_label(row), std::to_string(row.count), std::to_string(row.cumulative),
           fmt(row.relative), fmt(row.cumulative_relative)});
  md += t.str();
  md += "\nTotal observations: " + std::to_string(table.total) + "\n\n";

  const std::string chart = optional_key(sec, "chart", "");
  if (chart == "pie") {
    json payload = {{"kind", "pie"}, {"column", col.name}};
    json labels = json::array(), fractions = json::array();
    for (const FrequencyRow& row : table.rows) {
      labels.push_back(key_label(row));
      fractions.push_back(row.relative);
    }
    payload["labels"] = labels;
    payload["fractions"] = fractions;
    md += chart_note(sink.add("pie", payload));
  } else if (chart == "bar") {
    json payload = {{"kind", "bar"}, {"column", col.name}};
    json labels = json::array(), counts = json::array();
    for (const FrequencyRow& row : table.rows) {
      labels.push_back(key_label(row));
      counts.push_back(row.count);
    }
    payload["labels"] = labels;
    payload["counts"] = counts;
    md += chart_note(sink.add("bar", payload));
  } else if (chart == "histogram") {
    if (!binned)
      fail(ErrorCode::Config, "a histogram needs a binned numeric column");
    json payload = {{"kind", "histogram"}, {"column", col.name}};
    json edges = json::array(), counts = json::array();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      if (i == 0) edges.push_back(table.rows[i].lo);
      edges.push_back(table.rows[i].hi);
      counts.push_back(table.rows[i].count);
    }
    payload["edges"] = edges;
    payload["counts"] = counts;
    md += chart_note(sink.add("histogram", payload));
  } else if (!chart.empty()) {
    fail(ErrorCode::Config,
         "chart must be pie, bar or histogram in [frequencies], got '" + chart + "'");
  }
  return md;
}

// --- [summary] -------------------------------------------------------

std::string render_summary(const Dataset& data, const AnalysisSection& sec,
                           ChartSink& sink) {
  const Column& col = numeric_column(data, require_key(sec, "column"));
  const SummaryStats s = summarize(col);

  std::string md = "## Summary: " + col.name + "\n\n";
  TableWriter t({"statistic", "value"});
  t.add({"n", std::to_string(s.n)});
  t.add({"mean", fmt(s.mean)});
  t.add({"median", fmt(s.median)});
  t.add({"mode(s)", s.modes.empty() ? "none" : fmt_list(s.modes)});
  t.add({"variance (sample)", fmt(s.variance_sample)});
  t.add({"sd (sample)", fmt(s.sd_sample)});
  t.add({"variance (population)", fmt(s.variance_population)});
  t.add({"sd (population)", fmt(s.sd_population)});
  t.add({"minimum", fmt(s.min)});
  t.add({"Q1", fmt(s.q1)});
  t.add({"Q3", fmt(s.q3)});
  t.add({"maximum", fmt(s.max)});
  t.add({"range", fmt(s.range)});
  t.add({"IQR", fmt(s.iqr)});
  md += t.str() + "\n";

  if (s.n >= 4) {
    const OutlierReport r = classify_outliers(col);
    md += "Outlier fences: inner (" + fmt(r.inner_lo) + ", " + fmt(r.inner_hi) +
          "), outer (" + fmt(r.outer_lo) + ", " + fmt(r.outer_hi) + ")\n\n";
    md += "- suspected outliers: " + fmt_list(r.suspected) + "\n";
    md += "- extreme outliers: " + fmt_list(r.extreme) + "\n\n";
  }

  const std::string chart = optional_key(sec, "chart", "");
  if (chart == "boxplot") {
    const BoxplotPayload box = boxplot_payload(col);
    json payload = {{"kind", "boxplot"},   {"column", col.name},
                    {"minimum", box.minimum}, {"q1", box.q1},
                    {"median", box.median},   {"q3", box.q3},
                    {"maximum", box.maximum}, {"suspected", box.suspected},
                    {"extreme", box.extreme}};
    md += chart_note(sink.add("boxplot", payload));
  } else if (chart == "timechart") {
    json payload = {{"kind", "timechart"}, {"column", col.name}};
    json values = json::array();
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col.missing[i]) values.push_back(nullptr);
      else values.push_back(col.numeric[i]);
    }
    payload["values"] = values;
    md += chart_note(sink.add("timechart", payload));
  } else if (!chart.empty()) {
    fail(ErrorCode::Config,
         "chart must be boxplot or timechart in [summary], got '" + chart + "'");
  }
  return md;
}

// --- [test] ----------------------------------------------------------

std::string render_test(const Dataset& data, const AnalysisSection& sec,
                        const PipelineConfig& config) {
  const std::string kind = require_key(sec, "kind");
  const Tail tail = parse_tail(optional_key(sec, "tail", "two"));
  double alpha = config.alpha;
  if (sec.keys.count("alpha")) {
    alpha = parse_double(sec.keys.at("alpha"), "alpha");
    if (!(alpha > 0.0 && alpha < 1.0))
      fail(ErrorCode::Config, "alpha must lie strictly between 0 and 1");
  }

  auto sample = [&](const char* key) {
    return numeric_column(data, require_key(sec, key)).numeric_values();
  };

  TestResult r;
  if (kind == "z-mean") {
    const std::vector<double> v = sample("column");
    if (v.empty()) fail(ErrorCode::Data, "no observed values");
    std::optional<std::size_t> population;
    if (sec.keys.count("population"))
      population = parse_size(sec.keys.at("population"), "population");
    r = z_test_mean(mean(v), v.size(),
                    parse_double(require_key(sec, "mu0"), "mu0"),
                    parse_double(require_key(sec, "sigma"), "sigma"), tail, alpha,
                    population);
  } else if (kind == "t-mean") {
    r = t_test_mean(sample("column"), parse_double(require_key(sec, "mu0"), "mu0"),
                    tail, alpha);
  } else if (kind == "chi2-variance") {
    const double sigma0 = parse_double(require_key(sec, "sigma0"), "sigma0");
    r = chi2_test_variance(sample("column"), sigma0 * sigma0, tail, alpha);
  } else if (kind == "f-variance") {
    r = f_test_variance_ratio(sample("column"), sample("column2"), tail, alpha);
  } else if (kind == "proportion") {
    std::size_t successes = 0, trials = 0;
    if (sec.keys.count("column")) {
      const std::vector<double> v = sample("column");
      for (double x : v) {
        if (x != 0.0 && x != 1.0)
          fail(ErrorCode::Data, "a proportion test needs a 0/1 column");
        if (x == 1.0) ++successes;
      }
      trials = v.size();
    } else {
      successes = parse_size(require_key(sec, "successes"), "successes");
      trials = parse_size(require_key(sec, "trials"), "trials");
    }
    r = proportion_test(successes, trials,
                        parse_double(require_key(sec, "p0"), "p0"), tail, alpha);
  } else {
    fail(ErrorCode::Config,
         "test kind must be z-mean, t-mean, chi2-variance, f-variance or "
         "proportion, got '" + kind + "'");
  }

  std::string md = "## Hypothesis test: " + r.name + "\n\n";
  TableWriter t({"statistic", "reference", "df", "tail", "p-value", "alpha",
                 "decision"});
  t.add({fmt(r.statistic), distribution_label(r.reference), r.df_label,
         tail_name(r.tail), fmt(r.p_value), fmt(r.alpha),
         r.reject ? "reject H0" : "fail to reject H0"});
  md += t.str() + "\n";
  return md;
}

// --- [regression] ------------------------------------------------------

std::string render_regression(const Dataset& data, const AnalysisSection& sec) {
  const Column& response = numeric_column(data, require_key(sec, "response"));
  const std::vector<std::string> names = split_list(require_key(sec, "predictors"));
  if (names.empty()) fail(ErrorCode::Config, "[regression] needs predictors");
  std::vector<const Column*> cols = resolve_numeric(data, names);

  std::vector<const Column*> used = cols;
  used.push_back(&response);
  const std::vector<std::size_t> rows = complete_rows(used);
  const Matrix x = gather(cols, rows);
  std::vector<double> y(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) y[i] = response.numeric[rows[i]];

  const LinearModel model = fit_ols(x, y);
  const AnovaTable tab = anova(model, y);
  const std::vector<CoefficientTest> tests = coefficient_tests(model, y);

  std::string md = "## Regression: " + response.name + " ~ " + join(names, " + ") +
                   "\n\n";
  md += "- rows used: " + std::to_string(rows.size());
  const std::size_t dropped = data.row_count() - rows.size();
  if (dropped > 0) md += " (" + std::to_string(dropped) + " dropped for missing values)";
  md += "\n\n";

  TableWriter coef({"term", "estimate", "SE", "t", "p-value"});
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const std::string term = i == 0 ? "(intercept)" : names[i - 1];
    if (tests[i].defined) {
      coef.add({term, fmt(tests[i].estimate), fmt(tests[i].standard_error),
                fmt(tests[i].t), fmt(tests[i].p_value)});
    } else {
      coef.add({term, fmt(tests[i].estimate), "-", "-", "-"});
    }
  }
  md += coef.str() + "\n";

  TableWriter an({"source", "df", "SS", "MS", "F", "p-value"});
  an.add({"model", std::to_string(tab.dfm), fmt(tab.ssm), fmt(tab.msm), fmt(tab.f),
          fmt(tab.p_value)});
  an.add({"error", std::to_string(tab.dfe), fmt(tab.sse), fmt(tab.mse), "-", "-"});
  an.add({"total", std::to_string(tab.dfm + tab.dfe), fmt(tab.sst), "-", "-", "-"});
  md += an.str() + "\n";
  md += "R^2 = " + fmt(r_squared(tab)) + "\n\n";
  return md;
}

// --- [efa] ---------------------------------------------------------

std::string render_efa(const Dataset& data, const AnalysisSection& sec,
                       ChartSink& sink) {
  std::vector<std::string> names;
  if (sec.keys.count("columns")) {
    names = split_list(sec.keys.at("columns"));
  } else {
    for (const Column& col : data.columns)
      if (col.is_numeric()) names.push_back(col.name);
  }
  if (names.size() < 2)
    fail(ErrorCode::Config, "[efa] needs at least two numeric columns");
  const std::vector<const Column*> cols = resolve_numeric(data, names);
  const std::vector<std::size_t> rows = complete_rows(cols);
  const CorrelationMatrix r = correlation_matrix(gather(cols, rows));
  const std::size_t p = names.size();

  const BartlettResult bart = bartlett_sphericity(r);
  const KmoResult adequacy = kmo(r);
  const EigenPairs eig = eigen_symmetric(r.r);

  std::vector<std::string> warnings;
  std::size_t m = 0;
  if (sec.keys.count("factors")) {
    m = parse_size(sec.keys.at("factors"), "factors");
  } else {
    const std::string rule = optional_key(sec, "retain", "kaiser");
    if (rule == "kaiser") {
      m = retain(eig.values, RetentionRule::Kaiser, 0.0, &warnings);
    } else if (rule == "all") {
      m = retain(eig.values, RetentionRule::All, 0.0, &warnings);
    } else if (rule.rfind("variance:", 0) == 0) {
      m = retain(eig.values, RetentionRule::VarianceExplained,
                 parse_double(rule.substr(9), "variance threshold"), &warnings);
    } else {
      fail(ErrorCode::Config,
           "retain must be kaiser, all or variance:<t>, got '" + rule + "'");
    }
    if (m >= p) m = p - 1;  // extraction keeps at least one residual dimension
    if (m < 1) m = 1;
  }

  const std::string extraction = optional_key(sec, "extraction", "pca");
  FactorSolution sol;
  if (extraction == "pca") sol = extract_pca(r, m);
  else if (extraction == "paf") sol = extract_principal_axis(r, m);
  else fail(ErrorCode::Config, "extraction must be pca or paf, got '" + extraction + "'");

  const std::string rotation = optional_key(sec, "rotation", "varimax");
  if (rotation == "varimax") sol = rotate(sol, RotationKind::Varimax);
  else if (rotation == "quartimax") sol = rotate(sol, RotationKind::Quartimax);
  else if (rotation != "none")
    fail(ErrorCode::Config,
         "rotation must be none, varimax or quartimax, got '" + rotation + "'");

  warnings.insert(warnings.end(), sol.warnings.begin(), sol.warnings.end());

  std::string md = "## Factor analysis: " + join(names, ", ") + "\n\n";
  md += "- rows used: " + std::to_string(rows.size()) + "\n";
  md += "- Bartlett sphericity: statistic " + fmt(bart.statistic) + ", df " +
        std::to_string(bart.df) + ", p-value " + fmt(bart.p_value) + "\n";
  md += "- KMO overall: " + fmt(adequacy.overall) + " (" + adequacy.band + ")\n\n";

  TableWriter msa({"variable", "MSA"});
  for (std::size_t i = 0; i < p; ++i)
    msa.add({names[i], fmt(adequacy.per_variable[i])});
  md += msa.str() + "\n";

  TableWriter ev({"component", "eigenvalue", "share", "cumulative"});
  double cum = 0.0;
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    const double share = eig.values[i] / static_cast<double>(p);
    cum += share;
    ev.add({std::to_string(i + 1), fmt(eig.values[i]), fmt(share), fmt(cum)});
  }
  md += ev.str() + "\n";

  md += "- extraction: " + sol.extraction + ", rotation: " + sol.rotation +
        ", factors: " + std::to_string(m) + "\n\n";

  std::vector<std::string> header = {"variable"};
  for (std::size_t j = 0; j < m; ++j) header.push_back("F" + std::to_string(j + 1));
  header.push_back("h^2");
  header.push_back("psi");
  TableWriter loadings(header);
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<std::string> row = {names[i]};
    for (std::size_t j = 0; j < m; ++j) row.push_back(fmt(sol.loadings(i, j)));
    row.push_back(fmt(sol.communalities[i]));
    row.push_back(fmt(sol.specific_variances[i]));
    loadings.add(row);
  }
  md += loadings.str() + "\n";

  md += "- explained variance shares: " + fmt_list(sol.explained_shares) + "\n";
  for (const std::string& w : warnings) md += "- warning: " + w + "\n";
  md += "\n";

  const std::string chart = optional_key(sec, "chart", "");
  if (chart == "scree") {
    const auto pairs = scree_data(eig.values);
    json payload = {{"kind", "scree"}};
    json indices = json::array(), values = json::array();
    for (const auto& [index, value] : pairs) {
      indices.push_back(index);
      values.push_back(value);
    }
    payload["indices"] = indices;
    payload["eigenvalues"] = values;
    md += chart_note(sink.add("scree", payload));
  } else if (!chart.empty()) {
    fail(ErrorCode::Config, "chart must be scree in [efa], got '" + chart + "'");
  }
  return md;
}

// --- [reliability] ---------------------------------------------------

std::string render_reliability(const Dataset& data, const AnalysisSection& sec) {
  const std::vector<std::string> names = split_list(require_key(sec, "columns"));
  if (names.size() < 2)
    fail(ErrorCode::Config, "[reliability] needs at least two columns");
  const std::vector<const Column*> cols = resolve_numeric(data, names);
  const std::vector<std::size_t> rows = complete_rows(cols);
  const CronbachResult c = cronbach_alpha(gather(cols, rows));

  std::string md = "## Reliability: " + join(names, ", ") + "\n\n";
  md += "- rows used: " + std::to_string(rows.size()) + "\n";
  md += "- Cronbach's alpha: " + fmt(c.alpha) + " (" + c.band + ")\n\n";
  return md;
}

// --- [cluster] -------------------------------------------------------

std::string cluster_node_label(std::size_t id, std::size_t leaves,
                               const std::vector<std::size_t>& rows) {
  if (id < leaves) return "row " + std::to_string(rows[id] + 1);
  return "node " + std::to_string(id);
}

std::string render_cluster(const Dataset& data, const AnalysisSection& sec,
                           const PipelineConfig& config, ChartSink& sink) {
  const std::vector<std::string> names = split_list(require_key(sec, "columns"));
  if (names.empty()) fail(ErrorCode::Config, "[cluster] needs columns");
  const std::vector<const Column*> cols = resolve_numeric(data, names);
  const std::vector<std::size_t> rows = complete_rows(cols);
  const Matrix points = gather(cols, rows);
  const std::string method = optional_key(sec, "method", "hierarchical");

  std::string md;
  if (method == "hierarchical") {
    const std::string linkage = optional_key(sec, "linkage", "single");
    LinkageKind kind;
    if (linkage == "single") kind = LinkageKind::Single;
    else if (linkage == "complete") kind = LinkageKind::Complete;
    else if (linkage == "average-between") kind = LinkageKind::AverageBetween;
    else if (linkage == "average-within") kind = LinkageKind::AverageWithin;
    else if (linkage == "centroid") kind = LinkageKind::Centroid;
    else if (linkage == "ward") kind = LinkageKind::Ward;
    else
      fail(ErrorCode::Config,
           "linkage must be single, complete, average-between, average-within, "
           "centroid or ward, got '" + linkage + "'");

    const std::string distance_text = optional_key(sec, "distance", "euclidean");
    Dendrogram dendrogram;
    if (distance_text == "euclidean") {
      dendrogram = agglomerate_points(points, kind);
    } else {
      const DistanceSpec spec = parse_distance(distance_text);
      Matrix diss(points.rows(), points.rows());
      for (std::size_t i = 0; i < points.rows(); ++i)
        for (std::size_t j = i + 1; j < points.rows(); ++j) {
          const double d = distance(points.row(i), points.row(j), spec);
          diss(i, j) = d;
          diss(j, i) = d;
        }
      dendrogram = agglomerate_matrix(diss, kind);
    }

    md = "## Hierarchical clustering: " + join(names, ", ") + "\n\n";
    md += "- rows used: " + std::to_string(rows.size()) + "\n";
    md += "- linkage: " + std::string(linkage_name(kind)) + ", distance: " +
          distance_text + "\n\n";

    TableWriter t({"step", "merged", "height", "size"});
    for (std::size_t s = 0; s < dendrogram.steps.size(); ++s) {
      const MergeStep& step = dendrogram.steps[s];
      t.add({std::to_string(s + 1),
             cluster_node_label(step.a, dendrogram.leaves, rows) + " + " +
                 cluster_node_label(step.b, dendrogram.leaves, rows),
             fmt(step.height), std::to_string(step.size)});
    }
    md += t.str() + "\n";

    if (sec.keys.count("k")) {
      const std::size_t k = parse_size(sec.keys.at("k"), "k");
      const std::vector<std::size_t> labels = cut(dendrogram, k);
      std::vector<std::vector<std::size_t>> members(k);
      for (std::size_t i = 0; i < labels.size(); ++i)
        members[labels[i]].push_back(rows[i] + 1);
      for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::string> parts;
        for (std::size_t row : members[c]) parts.push_back(std::to_string(row));
        md += "- cluster " + std::to_string(c + 1) + " (size " +
              std::to_string(members[c].size()) + "): rows " + join(parts, ", ") +
              "\n";
      }
      md += "\n";
    }

    const std::string chart = optional_key(sec, "chart", "");
    if (chart == "dendrogram") {
      json payload = {{"kind", "dendrogram"}, {"leaves", dendrogram.leaves}};
      json merges = json::array();
      for (const MergeStep& step : dendrogram.steps)
        merges.push_back({step.a, step.b, step.height, step.size});
      payload["merges"] = merges;
      md += chart_note(sink.add("dendrogram", payload));
    } else if (!chart.empty()) {
      fail(ErrorCode::Config,
           "chart must be dendrogram in a hierarchical [cluster], got '" + chart +
               "'");
    }
    return md;
  }

  if (method != "kmeans")
    fail(ErrorCode::Config,
         "method must be hierarchical or kmeans, got '" + method + "'");
  if (optional_key(sec, "chart", "") != "")
    fail(ErrorCode::Config, "[cluster] charts are only for hierarchical runs");

  const std::size_t k = parse_size(require_key(sec, "k"), "k");
  KMeansInit init;
  init.seed = config.seed;
  const std::string init_text = optional_key(sec, "init", "farthest-first");
  if (init_text == "farthest-first") init.kind = KMeansInit::Kind::FarthestFirst;
  else if (init_text == "random") init.kind = KMeansInit::Kind::SeededRandom;
  else
    fail(ErrorCode::Config,
         "init must be farthest-first or random, got '" + init_text + "'");

  const KMeansResult result = kmeans(points, k, init);

  md = "## K-means clustering: " + join(names, ", ") + "\n\n";
  md += "- rows used: " + std::to_string(rows.size()) + ", k = " + std::to_string(k) +
        ", init: " + init_text + "\n";
  md += "- within-cluster sum of squares: " + fmt(result.wss) + "\n";
  md += "- iterations: " + std::to_string(result.iterations) + " (" +
        (result.converged ? "converged" : "iteration limit reached") + ")\n";
  md += "- WSS by iteration: " + fmt_list(result.wss_history) + "\n\n";

  std::vector<std::string> header = {"cluster"};
  for (const std::string& name : names) header.push_back(name);
  header.push_back("size");
  TableWriter t(header);
  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t i = 0; i < result.assignment.size(); ++i)
    members[result.assignment[i]].push_back(rows[i] + 1);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::string> row = {std::to_string(c + 1)};
    for (std::size_t j = 0; j < points.cols(); ++j)
      row.push_back(fmt(result.centroids(c, j)));
    row.push_back(std::to_string(members[c].size()));
    t.add(row);
  }
  md += t.str() + "\n";

  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::string> parts;
    for (std::size_t row : members[c]) parts.push_back(std::to_string(row));
    md += "- cluster " + std::to_string(c + 1) + ": rows " +
          (parts.empty() ? "none" : join(parts, ", ")) + "\n";
  }
  md += "\n";
  return md;
}

// --- [classify] ------------------------------------------------------

std::string oner_bin_label(const std::vector<double>& cuts, std::size_t i) {
  if (cuts.empty()) return "any value";
  if (i == 0) return "<= " + fmt(cuts[0]);
  if (i == cuts.size()) return "> " + fmt(cuts[i - 1]);
  return "(" + fmt(cuts[i - 1]) + ", " + fmt(cuts[i]) + "]";
}

std::string render_classify(const Dataset& data, const AnalysisSection& sec) {
  const std::string class_name = require_key(sec, "class");
  config_column(data, class_name);
  const LabeledDataset train = labeled(data, class_name);
  const std::string method = optional_key(sec, "method", "oner");

  std::string md;
  if (method == "oner") {
    const std::size_t bins = sec.keys.count("bins")
                                 ? parse_size(sec.keys.at("bins"), "bins")
                                 : 4;
    const OneRRule rule = train_oner(train, bins);

    md = "## Classifier (one rule): class " + class_name + "\n\n";
    md += "- chosen attribute: " + rule.attribute + "\n";
    md += "- default class: " + rule.default_class + "\n";
    md += "- training error: " + fmt(rule.training_error) + "\n\n";

    TableWriter t({rule.attribute, "predicted class"});
    if (rule.numeric_attribute) {
      for (std::size_t i = 0; i < rule.bin_classes.size(); ++i)
        t.add({oner_bin_label(rule.cuts, i), rule.bin_classes[i]});
    } else {
      for (const auto& [value, cls] : rule.label_classes) t.add({value, cls});
    }
    md += t.str() + "\n";
    return md;
  }

  if (method != "knn")
    fail(ErrorCode::Config, "method must be oner or knn, got '" + method + "'");

  const std::size_t k = sec.keys.count("k") ? parse_size(sec.keys.at("k"), "k") : 1;
  const DistanceSpec spec = parse_distance(optional_key(sec, "distance", "euclidean"));
  std::vector<double> query;
  for (const std::string& part : split_list(require_key(sec, "query")))
    query.push_back(parse_double(part, "query"));

  const std::string label = knn_predict(train, query, k, spec);
  md = "## Classifier (nearest neighbours): class " + class_name + "\n\n";
  md += "- k = " + std::to_string(k) + "\n";
  md += "- query (" + fmt_list(query) + ") -> " + label + "\n\n";
  return md;
}

std::string render_profile(const Dataset& data, const PipelineConfig& config) {
  std::string md = "# statkit report\n\n";
  md += "## Dataset\n\n";
  md += "- input: `" + config.input + "`\n";
  md += "- rows: " + std::to_string(data.row_count()) + "\n";
  md += "- columns: " + std::to_string(data.column_count()) + "\n\n";
  TableWriter t({"column", "kind", "observed", "missing"});
  for (const Column& col : data.columns)
    t.add({col.name, variable_kind_name(col.kind),
           std::to_string(col.size() - col.missing_count()),
           std::to_string(col.missing_count())});
  md += t.str() + "\n";
  return md;
}

}  // namespace

RenderedReport render(const PipelineConfig& config) {
  PipelineConfig cfg = config;
  if (const char* env = std::getenv("STATKIT_SEED"); env != nullptr && *env != '\0')
    cfg.seed = parse_u64(env, "STATKIT_SEED");

  const Dataset data = load_csv(cfg.input, parse_schema(cfg.schema));

  RenderedReport out;
  ChartSink sink{out.charts};
  std::string md = render_profile(data, cfg);

  for (const AnalysisSection& sec : cfg.sections) {
    if (sec.name == "frequencies") md += render_frequencies(data, sec, sink);
    else if (sec.name == "summary") md += render_summary(data, sec, sink);
    else if (sec.name == "test") md += render_test(data, sec, cfg);
    else if (sec.name == "regression") md += render_regression(data, sec);
    else if (sec.name == "efa") md += render_efa(data, sec, sink);
    else if (sec.name == "reliability") md += render_reliability(data, sec);
    else if (sec.name == "cluster") md += render_cluster(data, sec, cfg, sink);
    else if (sec.name == "classify") md += render_classify(data, sec);
  }

  out.markdown = md;
  return out;
}

RunResult run(const PipelineConfig& config) {
  const RenderedReport rendered = render(config);
  namespace fs = std::filesystem;
  const fs::path out_dir = config.output.empty() ? fs::path(".")
                                                 : fs::path(config.output);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec)
    fail(ErrorCode::Io,
         "cannot create output directory '" + out_dir.string() + "': " + ec.message());

  auto write_file = [](const fs::path& path, const std::string& body) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) fail(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
    file.write(body.data(), static_cast<std::streamsize>(body.size()));
    file.flush();
    if (!file) fail(ErrorCode::Io, "cannot write '" + path.string() + "'");
  };

  RunResult result;
  const fs::path report_path = out_dir / "report.md";
  write_file(report_path, rendered.markdown);
  result.report_path = report_path.string();

  if (!rendered.charts.empty()) {
    const fs::path charts_dir = out_dir / "charts";
    fs::create_directories(charts_dir, ec);
    if (ec)
      fail(ErrorCode::Io, "cannot create output directory '" + charts_dir.string() +
                              "': " + ec.message());
    for (const auto& [name, body] : rendered.charts) {
      const fs::path chart_path = charts_dir / name;
      write_file(chart_path, body);
      result.chart_paths.push_back(chart_path.string());
    }
  }
  return result;
}

BoxplotPayload boxplot_payload(const Column& col) {
  if (!col.is_numeric())
    fail(ErrorCode::InvalidArgument,
         "a boxplot needs a numeric column; '" + col.name + "' is not numeric");
  const std::vector<double> values = col.numeric_values();
  if (values.size() < 4)
    fail(ErrorCode::InvalidArgument, "a boxplot needs at least 4 observed values");

  const SummaryStats s = summarize(values);
  const OutlierReport r = classify_outliers(values);
  BoxplotPayload out;
  out.minimum = s.min;
  out.q1 = s.q1;
  out.median = s.median;
  out.q3 = s.q3;
  out.maximum = s.max;
  out.suspected = r.suspected;
  out.extreme = r.extreme;
  return out;
}

std::string describe_csv(const std::string& path, const std::string& schema,
                         const std::string& column) {
  const Dataset data = load_csv(path, parse_schema(schema));
  std::ostringstream out;

  if (column.empty()) {
    out << "input: " << path << "\n";
    out << "rows: " << data.row_count() << "\n";
    out << "columns: " << data.column_count() << "\n";
    for (const Column& col : data.columns) {
      out << "  " << col.name << " (" << variable_kind_name(col.kind) << ")";
      if (col.missing_count() > 0) out << ", missing " << col.missing_count();
      if (col.is_numeric()) {
        const std::vector<double> v = col.numeric_values();
        if (!v.empty()) {
          out << ", min " << fmt(*std::min_element(v.begin(), v.end())) << ", max "
              << fmt(*std::max_element(v.begin(), v.end()));
          out << ", mean " << fmt(mean(v));
        }
      } else {
        out << ", levels " << col.levels.size();
      }
      out << "\n";
    }
    return out.str();
  }

  const Column& col = data.column(column);
  out << "column: " << col.name << " (" << variable_kind_name(col.kind) << ")\n";
  out << "observed: " << col.size() - col.missing_count() << ", missing: "
      << col.missing_count() << "\n";
  if (col.is_numeric()) {
    const SummaryStats s = summarize(col);
    out << "mean: " << fmt(s.mean) << "\n";
    out << "median: " << fmt(s.median) << "\n";
    out << "mode(s): " << (s.modes.empty() ? "none" : fmt_list(s.modes)) << "\n";
    out << "sd (sample): " << fmt(s.sd_sample) << "\n";
    out << "min: " << fmt(s.min) << ", Q1: " << fmt(s.q1) << ", Q3: " << fmt(s.q3)
        << ", max: " << fmt(s.max) << "\n";
    out << "range: " << fmt(s.range) << ", IQR: " << fmt(s.iqr) << "\n";
  } else {
    const FrequencyTable table = frequency_table(col);
    for (const FrequencyRow& row : table.rows)
      out << row.category << ": " << row.count << " (" << fmt(row.relative) << ")\n";
  }
  return out.str();
}

}  // namespace statkit

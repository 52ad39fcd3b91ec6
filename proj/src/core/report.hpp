// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0
//
// Config-driven analysis pipeline: CSV in, Markdown report plus JSON
// chart payloads out.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/dataset.hpp"

namespace statkit {

// One [section] of the config; executed in file order.
struct AnalysisSection {
  std::string name;
  std::map<std::string, std::string> keys;
  std::size_t line = 0;  // for diagnostics
};

struct PipelineConfig {
  std::string input;                 // CSV path, required
  std::string output = "statkit-out";
  std::string schema;                // per-column kind overrides
  double alpha = 0.05;
  std::uint64_t seed = 0;
  std::vector<AnalysisSection> sections;
};

// Text format: global `key = value` lines, then repeatable [section]
// blocks. '#' starts a comment only at the beginning of a line.
PipelineConfig parse_config_text(const std::string& text,
                                 const std::string& origin = "<config>");
PipelineConfig load_config(const std::string& path);

// The full pipeline rendered to strings; no filesystem writes.
struct RenderedReport {
  std::string markdown;
  // (file name under charts/, JSON body) in emission order.
  std::vector<std::pair<std::string, std::string>> charts;
};
RenderedReport render(const PipelineConfig& config);

struct RunResult {
  std::string report_path;
  std::vector<std::string> chart_paths;
};

// Renders and writes report.md plus charts/*.json under config.output.
// The STATKIT_SEED environment variable overrides config.seed.
RunResult run(const PipelineConfig& config);

// Five-number summary plus the outlier lists, ready for charting.
struct BoxplotPayload {
  double minimum = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, maximum = 0.0;
  std::vector<double> suspected;
  std::vector<double> extreme;
};

// Needs a numeric column with at least 4 observed values.
BoxplotPayload boxplot_payload(const Column& col);

// Plain-text profile for the describe subcommand; `column` empty means
// the whole dataset.
std::string describe_csv(const std::string& path, const std::string& schema,
                         const std::string& column);

}  // namespace statkit

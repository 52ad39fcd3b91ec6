// Copyright 2026 The statkit authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library exclusively through the
// C interface.

#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "statkit/statkit.h"

namespace {

// 2: bad arguments or config; 3: the data cannot support the request;
// 4: numerical failure.
int exit_code_for(statkit_status status) {
  switch (status) {
    case STATKIT_OK: return 0;
    case STATKIT_ERR_INVALID_ARGUMENT: return 2;
    case STATKIT_ERR_CONFIG: return 2;
    case STATKIT_ERR_DATA: return 3;
    case STATKIT_ERR_IO: return 3;
    case STATKIT_ERR_NUMERIC: return 4;
    case STATKIT_ERR_INTERNAL: return 1;
  }
  return 1;
}

int report_failure(statkit_status status) {
  std::fprintf(stderr, "statkit: %s\n", statkit_last_error());
  return exit_code_for(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statkit - a small statistics toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  CLI::App* run = app.add_subcommand("run", "Execute a configured analysis pipeline");
  run->add_option("--config", config_path, "pipeline config file")->required();
  run->add_option("--out", out_dir, "output directory (overrides the config)");

  std::string csv_path;
  std::string schema;
  std::string column;
  CLI::App* describe = app.add_subcommand("describe", "Profile a CSV file");
  describe->add_option("csv", csv_path, "input CSV file")->required();
  describe->add_option("--column", column, "profile a single column");
  describe->add_option("--schema", schema,
                       "kind overrides, e.g. \"age=discrete;grade=ordinal(a<b<c)\"");

  CLI::App* version = app.add_subcommand("version", "Print the library version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(version)) {
    std::printf("statkit %s\n", statkit_version());
    return 0;
  }

  if (app.got_subcommand(run)) {
    char* report_path = nullptr;
    const statkit_status status = statkit_run_config(
        config_path.c_str(), out_dir.empty() ? nullptr : out_dir.c_str(),
        &report_path);
    if (status != STATKIT_OK) return report_failure(status);
    std::printf("wrote %s\n", report_path);
    statkit_string_free(report_path);
    return 0;
  }

  if (app.got_subcommand(describe)) {
    char* text = nullptr;
    const statkit_status status = statkit_describe_csv(
        csv_path.c_str(), schema.empty() ? nullptr : schema.c_str(),
        column.empty() ? nullptr : column.c_str(), &text);
    if (status != STATKIT_OK) return report_failure(status);
    std::fputs(text, stdout);
    statkit_string_free(text);
    return 0;
  }

  return 1;
}

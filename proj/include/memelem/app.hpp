/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "memelem/config.hpp"
#include "memelem/taxonomy.hpp"

namespace memelem {

using Paths = std::vector<std::filesystem::path>;

struct AnalysisRun {
  ClassificationReport report;
  Paths files;
};

/// classify plus artifacts: <name>.<depth>.csv, <name>.<depth>.svg and
/// <name>.report.json in the configured output directory.
AnalysisRun run_analysis(const RunConfig& config);

/// Figure ids understood by write_figure.
const std::vector<std::string>& figure_ids();

/// Writes the data and SVG for one figure id into `out_dir`.
/// Throws ConfigError("figure") for unknown ids.
Paths write_figure(const std::string& id, const std::filesystem::path& out_dir);

struct SuiteRun {
  SuiteReport report;
  Paths files;
};

/// Runs theorem_suite and writes suite.json into `out_dir`.
SuiteRun run_suite(const std::vector<CurveCase>& cases, const std::filesystem::path& out_dir,
                   const ToleranceSet& tol = {});

struct SweepRow {
  std::vector<double> values;
  std::string verdict;
  double max_candidate_witness = 0.0;
  std::string internal_source;
  std::string degeneration;
  bool ideal = false;
  std::string note;
};

struct SweepRun {
  std::vector<SweepRow> rows;
  Paths files;
};

/// One classify per point of the cartesian product of the axes, in
/// row-major order (last axis fastest). Writes <name>.sweep.csv.
SweepRun run_sweep(const SweepConfig& config);

/// Creates `dir` if needed and checks it accepts files.
void ensure_output_dir(const std::filesystem::path& dir);

}  // namespace memelem

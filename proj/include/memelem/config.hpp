/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "memelem/constitutive.hpp"
#include "memelem/excitation.hpp"
#include "memelem/taxonomy.hpp"
#include "memelem/tolerances.hpp"

namespace memelem {

/// One analysis run. Parsed from a flat JSON document:
///
///   {
///     "name": "second_order_cubic",
///     "curve": {"family": "polynomial", "params": [0, 1, 0, 0.3333333333333333],
///               "range": [0, 2], "max_derivative_order": 6},
///     "descriptor": {"alpha": -2, "beta": -2},
///     "excitation": {"amplitude": 1, "omega": 1, "offset": 1},
///     "grid_n": 4096,
///     "tolerances": {"witness_tol": 1e-8},
///     "output_dir": "out",
///     "formats": ["csv", "svg", "json"]
///   }
///
/// Only "curve" and "descriptor" are required. Curve families and params:
/// polynomial [c0, c1, ...], tanh_scaled [a, b], logistic [],
/// piecewise_linear [x0, y0, x1, y1, ...], two_branch with "outgoing" and
/// "returning" sub-curves instead of params.
struct RunConfig {
  std::string name = "run";
  ConstitutiveCurve curve = ConstitutiveCurve::polynomial({0.0, 1.0});
  ElementDescriptor descriptor;
  Excitation excitation;
  int grid_n = SampleGrid::kDefaultIntervals;
  ToleranceSet tolerances;
  std::filesystem::path output_dir = "out";
  std::set<std::string> formats{"csv", "svg", "json"};
};

/// Parameter sweep: the base run plus axes over curve params. Each axis is
/// {"param": index, "values": [...]}; the table covers the cartesian product.
struct SweepAxis {
  std::size_t param = 0;
  std::vector<double> values;
};

struct SweepConfig {
  RunConfig base;
  std::vector<SweepAxis> axes;
};

/// Throws ConfigError naming the offending field.
RunConfig parse_run_config(const std::string& json_text);
SweepConfig parse_sweep_config(const std::string& json_text);
/// Curve from its JSON object text; `field` prefixes error field names.
ConstitutiveCurve parse_curve(const std::string& json_text, const std::string& field = "curve");
/// Family list for the theorem suite: {"families": [{"id": ..., "curve": {...}}, ...]}.
std::vector<CurveCase> parse_families(const std::string& json_text);

/// Rebuilds `base` with params[index] replaced. Two-branch curves are not sweepable.
ConstitutiveCurve with_param(const ConstitutiveCurve& base, std::size_t index, double value);

/// Whole-file read; missing or unreadable files are a ConfigError on `field`.
std::string read_text_file(const std::filesystem::path& path, const std::string& field);

}  // namespace memelem

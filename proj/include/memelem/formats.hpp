/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "memelem/locus.hpp"
#include "memelem/taxonomy.hpp"

namespace memelem {

// --- CSV -------------------------------------------------------------------

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

/// Header `t,u,w`, one row per sample, shortest round-trip decimals.
void write_locus_csv(std::ostream& out, const ParametricLocus& locus);

struct LocusColumns {
  std::vector<double> t, u, w;
};

/// Inverse of write_locus_csv. Throws ConfigError on malformed input.
LocusColumns read_locus_csv(std::istream& in);

/// Generic table with a header row; cells are preformatted.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// --- SVG -------------------------------------------------------------------

struct PlotSeries {
  std::string label;
  std::vector<double> x, y;
  std::string color = "#1f77b4";
  bool dashed = false;
};

struct PlotMarker {
  double x = 0.0, y = 0.0;
  std::string label;
  std::string color = "#d62728";
};

struct Plot {
  std::string title;
  std::string x_label, y_label;
  std::vector<PlotSeries> series;
  std::vector<PlotMarker> markers;
};

/// Self-contained SVG, fixed 800x600 viewBox, axes through the origin when
/// it is in view. Output depends only on the input values.
std::string render_svg(const Plot& plot);

/// Locus polyline with its special points as markers.
Plot locus_plot(const ParametricLocus& locus, const std::vector<SpecialPoint>& points,
                const std::string& title);

// --- JSON ------------------------------------------------------------------

/// Pretty-printed JSON matching schema/classification_report.schema.json.
std::string report_to_json(const ClassificationReport& report);
std::string suite_to_json(const SuiteReport& report);

}  // namespace memelem

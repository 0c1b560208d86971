/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "memelem/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "memelem/errors.hpp"
#include "memelem/formats.hpp"
#include "memelem/transform.hpp"

namespace memelem {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content, Paths& files) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("output_dir", "cannot write '" + path.string() + "'");
  out << content;
  out.close();
  if (!out) throw ConfigError("output_dir", "failed writing '" + path.string() + "'");
  files.push_back(path);
}

std::string locus_csv(const ParametricLocus& l) {
  std::ostringstream os;
  write_locus_csv(os, l);
  return os.str();
}

std::string plane_title(const std::string& run, const PlaneFingerprint& p) {
  return run + ": " + p.axis_labels.second + " vs " + p.axis_labels.first + " (depth " +
         std::to_string(p.depth) + ")";
}

// Loci, CSV and SVG for every plane of a classified element.
void write_planes(const std::string& stem, const fs::path& dir, const ClassificationReport& rep,
                  const std::vector<ParametricLocus>& loci, bool csv, bool svg, Paths& files) {
  for (std::size_t d = 0; d < loci.size(); ++d) {
    const auto base = dir / (stem + "." + std::to_string(d));
    if (csv) write_file(base.string() + ".csv", locus_csv(loci[d]), files);
    if (svg) {
      auto points = rep.planes[d].special_points;
      if (d + 1 == loci.size())
        for (const auto& w : rep.witnesses)
          if (w.route == WitnessRoute::AbscissaZero) points.push_back(w.point);
      write_file(base.string() + ".svg", render_svg(locus_plot(loci[d], points, plane_title(stem, rep.planes[d]))),
                 files);
    }
  }
}

const auto kCubic = ConstitutiveCurve::polynomial({0.0, 1.0, 0.0, 1.0 / 3.0});
const auto kTanh = ConstitutiveCurve::tanh_scaled(1.0, 1.0);
const auto kFlatMidpoint = ConstitutiveCurve::polynomial({0.0, 0.0, 0.5, -1.0 / 6.0});

Paths locus_figure(const std::string& id, const ElementDescriptor& d, const ConstitutiveCurve& c,
                   const fs::path& dir) {
  const Excitation exc;
  const auto rep = classify(d, c, exc);
  const auto loci = element_loci(d, c, exc, rep.entry.order);
  Paths files;
  write_planes(id, dir, rep, loci, true, true, files);
  return files;
}

// Depth-1 waveforms against t with the abscissa scaled to the ordinate's peak.
Paths waveform_figure(const std::string& id, const ConstitutiveCurve& c, const std::string& title,
                      const fs::path& dir) {
  const Excitation exc;
  const auto l = analytic_locus(c, exc, 1, grid(exc));
  double peak_u = 0.0, peak_w = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    peak_u = std::max(peak_u, std::abs(l.u()[i]));
    peak_w = std::max(peak_w, std::abs(l.w()[i]));
  }
  const double scale = peak_u > 0.0 ? peak_w / peak_u : 1.0;
  std::vector<double> q(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) q[i] = l.u()[i] * scale;

  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < l.size(); ++i)
    rows.push_back({format_double(l.t()[i]), format_double(l.w()[i]), format_double(q[i])});
  std::ostringstream csv;
  write_csv(csv, {"t", "phi", "q_scaled"}, rows);

  Plot p;
  p.title = title;
  p.x_label = "t";
  p.y_label = "phi, q (scaled)";
  const std::vector<double> t(l.t().begin(), l.t().end()), w(l.w().begin(), l.w().end());
  p.series.push_back({"phi(t)", t, w, "#1f77b4"});
  p.series.push_back({"q(t) scaled", t, q, "#ff7f0e", true});
  const auto ph = phase_shift(c, exc);
  char label[64];
  if (ph.t_peak_ordinate) {
    std::snprintf(label, sizeof label, "C' t=%.4f", *ph.t_peak_ordinate);
    p.markers.push_back({*ph.t_peak_ordinate, state_at(l, *ph.t_peak_ordinate).w, label});
  }
  if (ph.t_peak_abscissa) {
    std::snprintf(label, sizeof label, "q peak t=%.4f", *ph.t_peak_abscissa);
    p.markers.push_back({*ph.t_peak_abscissa, state_at(l, *ph.t_peak_abscissa).u * scale, label, "#ff7f0e"});
  }
  Paths files;
  write_file(dir / (id + ".csv"), csv.str(), files);
  write_file(dir / (id + ".svg"), render_svg(p), files);
  return files;
}

Paths derivative_figure(const std::string& id, const ConstitutiveCurve& c, const fs::path& dir) {
  constexpr int n = 400;
  const auto& r = c.range();
  std::vector<double> x(n + 1), f0(n + 1), f1(n + 1), f2(n + 1);
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i <= n; ++i) {
    x[i] = i == n ? r.max : r.min + r.width() * i / n;
    f0[i] = c.derivative(x[i], 0);
    f1[i] = c.derivative(x[i], 1);
    f2[i] = c.derivative(x[i], 2);
    rows.push_back({format_double(x[i]), format_double(f0[i]), format_double(f1[i]), format_double(f2[i])});
  }
  std::ostringstream csv;
  write_csv(csv, {"x", "f", "df", "d2f"}, rows);
  const double mid = 0.5 * (r.min + r.max);
  Plot p;
  p.title = id + ": f, f' and f'' with f''(" + format_double(mid) + ") = " + format_double(c.derivative(mid, 2));
  p.x_label = "x";
  p.y_label = "f, f', f''";
  p.series.push_back({"f", x, f0, "#1f77b4"});
  p.series.push_back({"f'", x, f1, "#ff7f0e"});
  p.series.push_back({"f''", x, f2, "#2ca02c", true});
  p.markers.push_back({mid, c.derivative(mid, 2), "f''(" + format_double(mid) + ") = 0"});
  Paths files;
  write_file(dir / (id + ".csv"), csv.str(), files);
  write_file(dir / (id + ".svg"), render_svg(p), files);
  return files;
}

}  // namespace

void ensure_output_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw ConfigError("output_dir", "cannot create '" + dir.string() + "'");
  const auto probe = dir / ".memelem-write-test";
  {
    std::ofstream out(probe);
    if (!out) throw ConfigError("output_dir", "'" + dir.string() + "' is not writable");
  }
  fs::remove(probe, ec);
}

AnalysisRun run_analysis(const RunConfig& cfg) {
  ensure_output_dir(cfg.output_dir);
  AnalysisRun run;
  run.report = classify(cfg.descriptor, cfg.curve, cfg.excitation, cfg.tolerances, cfg.grid_n);
  const bool csv = cfg.formats.count("csv") > 0, svg = cfg.formats.count("svg") > 0;
  if (csv || svg) {
    const auto loci = element_loci(cfg.descriptor, cfg.curve, cfg.excitation, run.report.entry.order, cfg.grid_n);
    write_planes(cfg.name, cfg.output_dir, run.report, loci, csv, svg, run.files);
  }
  if (cfg.formats.count("json"))
    write_file(cfg.output_dir / (cfg.name + ".report.json"), report_to_json(run.report), run.files);
  return run;
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig2", "fig4", "fig6", "fig7", "fig8", "fig10"};
  return ids;
}

Paths write_figure(const std::string& id, const fs::path& out_dir) {
  if (std::find(figure_ids().begin(), figure_ids().end(), id) == figure_ids().end())
    throw ConfigError("figure", "unknown figure id '" + id + "'");
  ensure_output_dir(out_dir);
  if (id == "fig2") return locus_figure(id, {-1, -1}, kCubic, out_dir);
  if (id == "fig4") return locus_figure(id, {-2, -2}, kCubic, out_dir);
  if (id == "fig7") return locus_figure(id, {-2, -2}, kTanh, out_dir);
  if (id == "fig6") return waveform_figure(id, kCubic, "fig6: rho = sigma + sigma^3/3, phi(t) lags q(t)", out_dir);
  if (id == "fig8") return waveform_figure(id, kTanh, "fig8: rho = tanh(sigma), phi(t) leads q(t)", out_dir);
  return derivative_figure(id, kFlatMidpoint, out_dir);
}

SuiteRun run_suite(const std::vector<CurveCase>& cases, const fs::path& out_dir, const ToleranceSet& tol) {
  ensure_output_dir(out_dir);
  SuiteRun run;
  run.report = theorem_suite(cases, tol);
  write_file(out_dir / "suite.json", suite_to_json(run.report), run.files);
  return run;
}

SweepRun run_sweep(const SweepConfig& cfg) {
  ensure_output_dir(cfg.base.output_dir);
  SweepRun run;
  std::size_t total = 1;
  for (const auto& a : cfg.axes) total *= a.values.size();
  for (std::size_t idx = 0; idx < total; ++idx) {
    SweepRow row;
    row.values.resize(cfg.axes.size());
    std::size_t rest = idx;
    for (std::size_t k = cfg.axes.size(); k-- > 0;) {
      row.values[k] = cfg.axes[k].values[rest % cfg.axes[k].values.size()];
      rest /= cfg.axes[k].values.size();
    }
    try {
      auto curve = cfg.base.curve;
      for (std::size_t k = 0; k < cfg.axes.size(); ++k) curve = with_param(curve, cfg.axes[k].param, row.values[k]);
      const auto rep = classify(cfg.base.descriptor, curve, cfg.base.excitation, cfg.base.tolerances, cfg.base.grid_n);
      row.verdict = to_string(rep.verdict);
      row.max_candidate_witness = rep.max_candidate_witness;
      row.internal_source = to_string(rep.internal_source);
      row.degeneration = to_string(rep.degeneration);
      row.ideal = rep.ideality.ideal;
      for (const auto& c : rep.caveats) row.note += (row.note.empty() ? "" : "; ") + c;
    } catch (const Error& e) {
      row.verdict = "Error";
      row.note = e.what();
    }
    run.rows.push_back(std::move(row));
  }

  std::vector<std::string> header{"index"};
  for (const auto& a : cfg.axes) header.push_back("param" + std::to_string(a.param));
  for (const char* h : {"verdict", "max_candidate_witness", "internal_source", "degeneration", "ideal", "note"})
    header.emplace_back(h);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < run.rows.size(); ++i) {
    const auto& r = run.rows[i];
    std::vector<std::string> cells{std::to_string(i)};
    for (double v : r.values) cells.push_back(format_double(v));
    std::string note = r.note;
    std::replace(note.begin(), note.end(), ',', ';');
    std::replace(note.begin(), note.end(), '\n', ' ');
    cells.insert(cells.end(), {r.verdict, format_double(r.max_candidate_witness), r.internal_source,
                               r.degeneration, r.ideal ? "true" : "false", note});
    rows.push_back(std::move(cells));
  }
  std::ostringstream os;
  write_csv(os, header, rows);
  write_file(cfg.base.output_dir / (cfg.base.name + ".sweep.csv"), os.str(), run.files);
  return run;
}

}  // namespace memelem

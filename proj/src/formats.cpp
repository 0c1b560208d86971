/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "memelem/formats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "memelem/errors.hpp"

namespace memelem {

using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void write_locus_csv(std::ostream& out, const ParametricLocus& locus) {
  out << "t,u,w\n";
  for (std::size_t i = 0; i < locus.size(); ++i)
    out << format_double(locus.t()[i]) << ',' << format_double(locus.u()[i]) << ','
        << format_double(locus.w()[i]) << '\n';
}

namespace {

double parse_cell(const std::string& cell, std::size_t line) {
  double v = 0.0;
  const auto r = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (r.ec != std::errc() || r.ptr != cell.data() + cell.size())
    throw ConfigError("csv:" + std::to_string(line), "not a number: '" + cell + "'");
  return v;
}

}  // namespace

LocusColumns read_locus_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "t,u,w") throw ConfigError("csv:1", "expected header t,u,w");
  LocusColumns c;
  std::size_t n = 1;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != 3) throw ConfigError("csv:" + std::to_string(n), "expected 3 columns");
    c.t.push_back(parse_cell(cells[0], n));
    c.u.push_back(parse_cell(cells[1], n));
    c.w.push_back(parse_cell(cells[2], n));
  }
  return c;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kWidth = 800, kHeight = 600;
constexpr double kLeft = 80, kRight = 160, kTop = 50, kBottom = 60;

std::string fx(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v, double span) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-9 * span ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Bounds {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) lo = -1, hi = 1;
    if (hi - lo < 1e-12) lo -= 1, hi += 1;
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
};

}  // namespace

std::string render_svg(const Plot& plot) {
  Bounds bx, by;
  for (const auto& s : plot.series)
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      bx.add(s.x[i]);
      by.add(s.y[i]);
    }
  for (const auto& m : plot.markers) {
    bx.add(m.x);
    by.add(m.y);
  }
  bx.finish();
  by.finish();
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto X = [&](double v) { return kLeft + (v - bx.lo) / (bx.hi - bx.lo) * pw; };
  auto Y = [&](double v) { return kTop + (by.hi - v) / (by.hi - by.lo) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\" "
       "font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  o << "<text x=\"" << fx(kLeft + pw / 2) << "\" y=\"30\" text-anchor=\"middle\" font-size=\"16\">"
    << escape(plot.title) << "</text>\n";
  o << "<rect x=\"" << fx(kLeft) << "\" y=\"" << fx(kTop) << "\" width=\"" << fx(pw) << "\" height=\""
    << fx(ph) << "\" fill=\"none\" stroke=\"#999\"/>\n";

  // Axes through the origin when visible, otherwise along the frame.
  const double ax = bx.lo <= 0 && 0 <= bx.hi ? X(0) : kLeft;
  const double ay = by.lo <= 0 && 0 <= by.hi ? Y(0) : kTop + ph;
  o << "<line x1=\"" << fx(kLeft) << "\" y1=\"" << fx(ay) << "\" x2=\"" << fx(kLeft + pw) << "\" y2=\""
    << fx(ay) << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << fx(ax) << "\" y1=\"" << fx(kTop) << "\" x2=\"" << fx(ax) << "\" y2=\""
    << fx(kTop + ph) << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double vx = bx.lo + (bx.hi - bx.lo) * k / 4.0;
    const double vy = by.lo + (by.hi - by.lo) * k / 4.0;
    o << "<text x=\"" << fx(X(vx)) << "\" y=\"" << fx(kTop + ph + 18) << "\" text-anchor=\"middle\">"
      << tick(vx, bx.hi - bx.lo) << "</text>\n";
    o << "<text x=\"" << fx(kLeft - 8) << "\" y=\"" << fx(Y(vy) + 4) << "\" text-anchor=\"end\">"
      << tick(vy, by.hi - by.lo) << "</text>\n";
  }
  o << "<text x=\"" << fx(kLeft + pw / 2) << "\" y=\"" << fx(kHeight - 15)
    << "\" text-anchor=\"middle\">" << escape(plot.x_label) << "</text>\n";
  o << "<text x=\"20\" y=\"" << fx(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
    << fx(kTop + ph / 2) << ")\">" << escape(plot.y_label) << "</text>\n";

  for (const auto& s : plot.series) {
    o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\""
      << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"";
    bool first = true;
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      o << (first ? "" : " ") << fx(X(s.x[i])) << ',' << fx(Y(s.y[i]));
      first = false;
    }
    o << "\"/>\n";
  }
  for (std::size_t i = 0; i < plot.markers.size(); ++i) {
    const auto& m = plot.markers[i];
    o << "<circle cx=\"" << fx(X(m.x)) << "\" cy=\"" << fx(Y(m.y)) << "\" r=\"4\" fill=\"" << m.color
      << "\"/>\n";
    if (m.label.empty()) continue;
    // Labels near the right edge grow leftwards; alternate rows reduce overlap.
    const bool right = X(m.x) > kLeft + 0.7 * pw;
    o << "<text x=\"" << fx(X(m.x) + (right ? -6 : 6)) << "\" y=\"" << fx(Y(m.y) + (i % 2 ? 16 : -6))
      << "\" fill=\"" << m.color << "\"" << (right ? " text-anchor=\"end\"" : "") << ">" << escape(m.label)
      << "</text>\n";
  }
  double ly = kTop + 10;
  for (const auto& s : plot.series) {
    const double lx = kLeft + pw + 12;
    o << "<line x1=\"" << fx(lx) << "\" y1=\"" << fx(ly) << "\" x2=\"" << fx(lx + 24) << "\" y2=\"" << fx(ly)
      << "\" stroke=\"" << s.color << "\" stroke-width=\"1.5\""
      << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
    o << "<text x=\"" << fx(lx + 30) << "\" y=\"" << fx(ly + 4) << "\">" << escape(s.label) << "</text>\n";
    ly += 18;
  }
  o << "</svg>\n";
  return o.str();
}

Plot locus_plot(const ParametricLocus& locus, const std::vector<SpecialPoint>& points,
                const std::string& title) {
  Plot p;
  p.title = title;
  p.x_label = locus.axis_labels().first;
  p.y_label = locus.axis_labels().second;
  p.series.push_back({p.y_label + " vs " + p.x_label, {locus.u().begin(), locus.u().end()},
                      {locus.w().begin(), locus.w().end()}});
  // Coincident points of one kind share a marker.
  std::vector<std::pair<const SpecialPoint*, std::string>> merged;
  for (const auto& sp : points) {
    char t[32];
    std::snprintf(t, sizeof t, "%.4f", sp.t);
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) {
      return m.first->kind == sp.kind && std::abs(m.first->u - sp.u) <= 1e-9 && std::abs(m.first->w - sp.w) <= 1e-9;
    });
    if (it != merged.end())
      it->second += std::string(", ") + t;
    else
      merged.emplace_back(&sp, to_string(sp.kind) + " t=" + t);
  }
  for (const auto& [sp, label] : merged)
    p.markers.push_back({sp->u, sp->w, label, sp->kind == SpecialPoint::Kind::Pinch ? "#2ca02c" : "#d62728"});
  return p;
}

// ---------------------------------------------------------------------------

namespace {

ordered_json num(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

template <typename T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json point_json(const SpecialPoint& p) {
  return {{"t", num(p.t)},
          {"u", num(p.u)},
          {"w", num(p.w)},
          {"kind", to_string(p.kind)},
          {"chord_angle", p.chord_angle ? num(*p.chord_angle) : ordered_json(nullptr)}};
}

ordered_json labels_json(const std::pair<std::string, std::string>& l) {
  return {{"abscissa", l.first}, {"ordinate", l.second}};
}

ordered_json ideality_json(const IdealityReport& r) {
  ordered_json j;
  j["ideal"] = r.ideal;
  j["single_valued"] = r.single_valued;
  j["multivalued_at"] = opt(r.multivalued_at);
  j["nonlinear"] = r.nonlinear;
  j["max_secant_deviation"] = num(r.max_secant_deviation);
  j["continuously_differentiable"] = r.continuously_differentiable;
  j["worst_slope_jump_at"] = opt(r.worst_slope_jump_at);
  j["worst_slope_jump"] = num(r.worst_slope_jump);
  j["strictly_monotone_increasing"] = r.strictly_monotone_increasing;
  j["violating_interval"] = r.violating_interval
                                ? ordered_json::array({r.violating_interval->first, r.violating_interval->second})
                                : ordered_json(nullptr);
  j["zero_derivative_points"] = r.zero_derivative_points;
  return j;
}

}  // namespace

std::string report_to_json(const ClassificationReport& r) {
  ordered_json j;
  j["descriptor"] = {{"alpha", r.descriptor.alpha}, {"beta", r.descriptor.beta}};
  j["element"] = {{"name", r.entry.name},
                  {"class", to_string(r.entry.element_class)},
                  {"order", r.entry.order},
                  {"in_six_pointed_star", r.entry.in_six_pointed_star},
                  {"constitutive_plane", labels_json(r.entry.constitutive_plane)},
                  {"verdict_plane", labels_json(r.entry.verdict_plane)}};
  j["ideality"] = ideality_json(r.ideality);
  auto planes = ordered_json::array();
  for (const auto& p : r.planes) {
    ordered_json pj;
    pj["depth"] = p.depth;
    pj["axes"] = labels_json(p.axis_labels);
    pj["provenance"] = to_string(p.provenance);
    auto arcs = ordered_json::array();
    for (const auto& a : p.negative_slope_arcs) arcs.push_back({{"t_start", num(a.t_start)}, {"t_end", num(a.t_end)}});
    pj["fingerprint"] = {{"pinched", p.pinched},
                         {"valuedness", to_string(p.valuedness)},
                         {"odd_symmetric", p.odd_symmetric},
                         {"symmetry_violation", num(p.symmetry_violation)},
                         {"negative_slope_arcs", arcs}};
    auto zeros = ordered_json::array();
    for (const auto& z : p.abscissa_zeros) zeros.push_back({{"t", num(z.t)}, {"w", num(z.w)}});
    pj["abscissa_zeros"] = zeros;
    auto sp = ordered_json::array();
    for (const auto& s : p.special_points) sp.push_back(point_json(s));
    pj["special_points"] = sp;
    planes.push_back(pj);
  }
  j["per_plane"] = planes;
  j["verdict"] = to_string(r.verdict);
  auto ws = ordered_json::array();
  for (const auto& w : r.witnesses) {
    auto wj = point_json(w.point);
    wj["route"] = to_string(w.route);
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  j["max_candidate_witness"] = num(r.max_candidate_witness);
  j["degeneration"] = to_string(r.degeneration);
  j["internal_source"] = to_string(r.internal_source);
  j["caveats"] = r.caveats;
  return j.dump(2) + "\n";
}

std::string suite_to_json(const SuiteReport& r) {
  ordered_json j;
  auto checks = ordered_json::array();
  for (const auto& c : r.checks) {
    auto ev = ordered_json::array();
    for (const auto& p : c.evidence) ev.push_back(point_json(p));
    checks.push_back({{"theorem", c.theorem},
                      {"instance_id", c.instance_id},
                      {"outcome", to_string(c.outcome)},
                      {"detail", c.detail},
                      {"evidence", ev}});
  }
  j["checks"] = checks;
  ordered_json summary;
  for (const auto& [name, s] : r.summary)
    summary[name] = {{"passed", s.passed},
                     {"failed", s.failed},
                     {"skipped", s.skipped},
                     {"inconclusive", s.inconclusive},
                     {"holds", s.holds}};
  j["summary"] = summary;
  j["all_passed"] = r.all_passed;
  return j.dump(2) + "\n";
}

}  // namespace memelem

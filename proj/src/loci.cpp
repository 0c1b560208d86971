/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "memelem/loci.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "memelem/errors.hpp"
#include "memelem/transform.hpp"
#include "roots.hpp"

namespace memelem {

namespace {

enum class Component { U, W, DU, DW };

double pick(const PlaneState& s, Component c) {
  switch (c) {
    case Component::U: return s.u;
    case Component::W: return s.w;
    case Component::DU: return s.du;
    case Component::DW: return s.dw;
  }
  return 0.0;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Sampled coordinates and time derivatives of a locus. Derivatives come from
/// the sampler when present, otherwise from central differences.
struct Series {
  const ParametricLocus& locus;
  std::vector<double> t, u, w, du, dw;

  explicit Series(const ParametricLocus& l)
      : locus(l),
        t(l.t().begin(), l.t().end()),
        u(l.u().begin(), l.u().end()),
        w(l.w().begin(), l.w().end()),
        du(t.size()),
        dw(t.size()) {
    if (l.has_sampler()) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        const auto s = l.sample(t[i]);
        du[i] = s.du;
        dw[i] = s.dw;
      }
    } else {
      differentiate(u, du);
      differentiate(w, dw);
    }
  }

  void differentiate(const std::vector<double>& v, std::vector<double>& d) const {
    const std::size_t n = v.size() - 1;
    const bool periodic = std::abs(v[n] - v[0]) <= 1e-9 * std::max(1.0, max_abs(v));
    for (std::size_t i = 0; i <= n; ++i) {
      std::size_t lo = i == 0 ? (periodic ? n - 1 : 0) : i - 1;
      std::size_t hi = i == n ? (periodic ? 1 : n) : i + 1;
      double span = 0.0;
      if (i == 0 && periodic) {
        span = (t[n] - t[n - 1]) + (t[1] - t[0]);
      } else if (i == n && periodic) {
        span = (t[n] - t[n - 1]) + (t[1] - t[0]);
      } else {
        span = t[hi] - t[lo];
      }
      d[i] = (v[hi] - v[lo]) / span;
    }
  }

  bool analytic() const { return locus.has_sampler(); }

  const std::vector<double>& values(Component c) const {
    switch (c) {
      case Component::U: return u;
      case Component::W: return w;
      case Component::DU: return du;
      default: return dw;
    }
  }

  PlaneState at(double tt) const {
    if (analytic()) return locus.sample(tt);
    auto it = std::lower_bound(t.begin(), t.end(), tt);
    std::size_t j = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(it - t.begin(), 1,
                                                                         static_cast<std::ptrdiff_t>(t.size()) - 1));
    const double a = (tt - t[j - 1]) / (t[j] - t[j - 1]);
    auto lerp = [&](const std::vector<double>& v) { return v[j - 1] + a * (v[j] - v[j - 1]); };
    return {lerp(u), lerp(w), lerp(du), lerp(dw)};
  }

  /// Threshold under which a derivative counts as vanishing alongside its partner.
  double degenerate_tol(Component c, double root_tol) const {
    const double scale = std::max(1.0, max_abs(values(c)));
    return analytic() ? root_tol * scale : 1e-4 * scale;
  }
};

struct Root {
  double t;
  int from;
  int to;
};

/// Zeros of one component from sign changes on the grid. A run of samples at
/// noise level between opposite signs is bracketed; with `include_touch`, a run
/// that does not change sign (or touches the ends) is reported at its
/// smallest sample.
std::vector<Root> find_roots(const Series& s, Component c, bool include_touch) {
  const auto& f = s.values(c);
  const double scale = max_abs(f);
  std::vector<Root> roots;
  if (scale == 0.0) return roots;
  const double noise = (s.analytic() ? 1e-13 : 1e-9) * scale;
  const std::size_t n = f.size();
  auto sign = [&](std::size_t i) { return std::abs(f[i]) <= noise ? 0 : (f[i] > 0 ? 1 : -1); };

  auto refine = [&](std::size_t lo, std::size_t hi) {
    if (s.analytic())
      return detail::bisect([&](double tt) { return pick(s.locus.sample(tt), c); }, s.t[lo], s.t[hi]);
    return s.t[lo] + (s.t[hi] - s.t[lo]) * f[lo] / (f[lo] - f[hi]);
  };

  std::size_t i = 0;
  while (i < n) {
    if (sign(i) != 0) {
      if (i + 1 < n && sign(i + 1) != 0 && sign(i + 1) != sign(i))
        roots.push_back({refine(i, i + 1), sign(i), sign(i + 1)});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && sign(j + 1) == 0) ++j;
    const bool has_left = i > 0;
    const bool has_right = j + 1 < n;
    const int sl = has_left ? sign(i - 1) : 0;
    const int sr = has_right ? sign(j + 1) : 0;
    if (has_left && has_right && sl != sr) {
      roots.push_back({refine(i - 1, j + 1), sl, sr});
    } else if (include_touch) {
      std::size_t best = i;
      for (std::size_t k = i; k <= j; ++k)
        if (std::abs(f[k]) < std::abs(f[best])) best = k;
      roots.push_back({s.t[best], sl, sr});
    }
    i = j + 1;
  }
  return roots;
}

}  // namespace

PlaneState state_at(const ParametricLocus& locus, double t) {
  if (locus.has_sampler()) return locus.sample(t);
  return Series(locus).at(t);
}

double WitnessPair::difference() const { return std::abs(w1 - w2); }

OriginCrossing origin_crossing(const ParametricLocus& locus, double tol) {
  const Series s(locus);
  OriginCrossing out;
  for (const auto& r : find_roots(s, Component::U, true)) {
    const auto st = s.at(r.t);
    out.abscissa_zeros.push_back({r.t, st.w});
    if (std::abs(st.u) <= tol && std::abs(st.w) <= tol)
      out.pinches.push_back({r.t, st.u, st.w, SpecialPoint::Kind::Pinch, std::nullopt});
  }
  out.crosses_origin = !out.pinches.empty();
  return out;
}

namespace {

/// Pairs every sample with its partner under t -> shift - t (mod period).
/// Returns (t1, state1, t2, state2) tuples via the callback.
template <typename F>
void for_each_reflection(const ParametricLocus& locus, bool half_period, F&& visit) {
  const std::size_t n = locus.size() - 1;
  const auto t = locus.t();
  const auto u = locus.u();
  const auto w = locus.w();
  if (locus.uniform() && n % 2 == 0) {
    const auto nn = static_cast<std::ptrdiff_t>(n);
    for (std::size_t i = 0; i <= n; ++i) {
      const auto ii = static_cast<std::ptrdiff_t>(i);
      std::ptrdiff_t j = half_period ? ((nn / 2 - ii) % nn + nn) % nn : nn - ii;
      const auto jj = static_cast<std::size_t>(j);
      visit(t[i], u[i], w[i], t[jj], u[jj], w[jj]);
    }
    return;
  }
  if (!locus.has_sampler())
    throw NumericalError("locus pairing needs a uniform grid with an even interval count");
  const double period = locus.period();
  const double shift = half_period ? 0.5 * period : period;
  for (std::size_t i = 0; i <= n; ++i) {
    double t2 = std::fmod(shift - (t[i] - t[0]) + 2.0 * period, period) + t[0];
    const auto st = locus.sample(t2);
    visit(t[i], u[i], w[i], t2, st.u, st.w);
  }
}

}  // namespace

ValuednessReport valuedness(const ParametricLocus& locus, double tol) {
  ValuednessReport rep;
  std::vector<WitnessPair> pairs;
  for_each_reflection(locus, locus.depth() % 2 == 1,
                      [&](double t1, double u1, double w1, double t2, double u2, double w2) {
                        if (!(t1 < t2)) return;
                        WitnessPair p{t1, t2, u1, u2, w1, w2};
                        rep.max_difference = std::max(rep.max_difference, p.difference());
                        if (p.difference() > tol) pairs.push_back(p);
                      });
  rep.valuedness = pairs.empty() ? Valuedness::Single : Valuedness::Double;
  const std::size_t keep = std::min(pairs.size(), ValuednessReport::kMaxWitnesses);
  std::partial_sort(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(keep), pairs.end(),
                    [](const auto& a, const auto& b) { return a.difference() > b.difference(); });
  pairs.resize(keep);
  rep.witnesses = std::move(pairs);
  return rep;
}

SymmetryReport odd_symmetry(const ParametricLocus& locus, double tol) {
  SymmetryReport rep;
  for_each_reflection(locus, false, [&](double, double u1, double w1, double, double u2, double w2) {
    rep.max_violation = std::max({rep.max_violation, std::abs(u1 + u2), std::abs(w1 + w2)});
  });
  rep.odd_symmetric = rep.max_violation <= tol;
  return rep;
}

std::vector<SpecialPoint> zero_tangent_points(const ParametricLocus& locus, double root_tol) {
  const Series s(locus);
  const double deg = s.degenerate_tol(Component::DU, root_tol);
  std::vector<SpecialPoint> out;
  for (const auto& r : find_roots(s, Component::DW, false)) {
    const auto st = s.at(r.t);
    if (std::abs(st.du) <= deg) continue;
    out.push_back({r.t, st.u, st.w, SpecialPoint::Kind::ZeroTangent, chord_angle(st.u, st.w)});
  }
  return out;
}

std::vector<SpecialPoint> vertical_tangent_points(const ParametricLocus& locus, double root_tol) {
  const Series s(locus);
  const double deg = s.degenerate_tol(Component::DW, root_tol);
  std::vector<SpecialPoint> out;
  for (const auto& r : find_roots(s, Component::DU, false)) {
    const auto st = s.at(r.t);
    if (std::abs(st.dw) <= deg) continue;
    out.push_back({r.t, st.u, st.w, SpecialPoint::Kind::VerticalTangent, chord_angle(st.u, st.w)});
  }
  return out;
}

std::vector<ArcInterval> negative_slope_arcs(const ParametricLocus& locus, double root_tol) {
  const Series s(locus);
  const double deg_u = s.degenerate_tol(Component::DU, root_tol);
  const double deg_w = s.degenerate_tol(Component::DW, root_tol);
  const std::size_t n = s.t.size();
  std::vector<int> cls(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(s.du[i]) <= deg_u || std::abs(s.dw[i]) <= deg_w) continue;
    cls[i] = (s.du[i] > 0) == (s.dw[i] > 0) ? 1 : -1;
  }

  // Boundary between classified samples a < b, possibly separated by
  // degenerate samples: root of the derivative that flips, nearest the arc.
  auto boundary = [&](std::size_t a, std::size_t b, bool arc_before) {
    std::vector<double> roots;
    for (Component c : {Component::DU, Component::DW}) {
      const auto& f = s.values(c);
      if (std::signbit(f[a]) == std::signbit(f[b])) continue;
      std::size_t k = a;
      while (k + 1 < b && std::signbit(f[k + 1]) == std::signbit(f[a])) ++k;
      if (s.analytic())
        roots.push_back(
            detail::bisect([&](double tt) { return pick(s.locus.sample(tt), c); }, s.t[k], s.t[k + 1]));
      else
        roots.push_back(s.t[k] + (s.t[k + 1] - s.t[k]) * f[k] / (f[k] - f[k + 1]));
    }
    if (roots.empty()) return s.t[(a + b) / 2];
    return arc_before ? *std::min_element(roots.begin(), roots.end())
                      : *std::max_element(roots.begin(), roots.end());
  };

  std::vector<ArcInterval> arcs;
  std::size_t i = 0;
  while (i < n) {
    if (cls[i] != -1) {
      ++i;
      continue;
    }
    // Degenerate samples with a negative slope on both sides stay inside the arc.
    std::size_t j = i;
    for (;;) {
      while (j + 1 < n && cls[j + 1] == -1) ++j;
      std::size_t k = j + 1;
      while (k < n && cls[k] == 0) ++k;
      if (k == j + 1 || k == n || cls[k] != -1) break;
      j = k;
    }
    std::size_t p = i;
    while (p > 0 && cls[p - 1] == 0) --p;
    std::size_t q = j;
    while (q + 1 < n && cls[q + 1] == 0) ++q;
    const double start = p == 0 ? s.t[0] : boundary(p - 1, i, false);
    const double end = q + 1 == n ? s.t[n - 1] : boundary(j, q + 1, true);
    arcs.push_back({start, end, -1});
    i = j + 1;
  }
  return arcs;
}

PhaseReport phase_shift(const ConstitutiveCurve& curve, const Excitation& exc,
                        const ToleranceSet& tol, int intervals) {
  const auto g = grid(exc, intervals);
  const auto locus = analytic_locus(curve, exc, 1, g);
  const Series s(locus);
  const double half = 0.5 * exc.period();
  auto first_peak = [&](Component c) -> std::optional<double> {
    for (const auto& r : find_roots(s, c, false))
      if (r.t > 0.0 && r.t < half && r.from > 0 && r.to < 0) return r.t;
    return std::nullopt;
  };
  PhaseReport rep;
  rep.t_peak_ordinate = first_peak(Component::DW);
  rep.t_peak_abscissa = first_peak(Component::DU);
  if (rep.t_peak_ordinate && rep.t_peak_abscissa) {
    rep.shift = *rep.t_peak_ordinate - *rep.t_peak_abscissa;
    if (rep.shift > tol.phase_tol)
      rep.classification = PhaseClass::Lag;
    else if (rep.shift < -tol.phase_tol)
      rep.classification = PhaseClass::Advance;
  }
  return rep;
}

std::string to_string(Valuedness v) { return v == Valuedness::Single ? "single" : "double"; }

std::string to_string(PhaseClass p) {
  switch (p) {
    case PhaseClass::Lag: return "lag";
    case PhaseClass::Advance: return "advance";
    case PhaseClass::None: return "none";
  }
  return "none";
}

}  // namespace memelem

/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "memelem/transform.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "memelem/errors.hpp"

namespace memelem {

Branch branch_at(const Excitation& exc, double t) {
  const double phase = std::fmod(exc.omega * t, 2.0 * std::numbers::pi);
  if (phase == 0.0) return t > 0.0 ? Branch::Returning : Branch::Outgoing;
  return phase <= std::numbers::pi ? Branch::Outgoing : Branch::Returning;
}

namespace {

// Faa di Bruno for depth <= 4 with f^(k) = fd[k], x^(k) = xd[k].
double chain_formula(const std::array<double, 5>& fd, const std::array<double, 5>& xd, int depth) {
  const double x1 = xd[1], x2 = xd[2], x3 = xd[3], x4 = xd[4];
  switch (depth) {
    case 0: return fd[0];
    case 1: return fd[1] * x1;
    case 2: return fd[2] * x1 * x1 + fd[1] * x2;
    case 3: return fd[3] * x1 * x1 * x1 + 3.0 * fd[2] * x1 * x2 + fd[1] * x3;
    case 4:
      return fd[4] * x1 * x1 * x1 * x1 + 6.0 * fd[3] * x1 * x1 * x2 +
             fd[2] * (3.0 * x2 * x2 + 4.0 * x1 * x3) + fd[1] * x4;
    default: break;
  }
  throw CapabilityError("chain rule bank stops at depth 4");
}

void check_depth(const ConstitutiveCurve& curve, int depth) {
  if (depth < 0) throw DomainError("transform: depth must be non-negative");
  if (depth > curve.max_derivative_order()) {
    std::ostringstream os;
    os << "transform: depth " << depth << " exceeds the curve's max_derivative_order "
       << curve.max_derivative_order();
    throw CapabilityError(os.str());
  }
}

std::string primes(int n) { return std::string(static_cast<std::size_t>(n), '\''); }

}  // namespace

double chain_ordinate(const ConstitutiveCurve& curve, const Excitation& exc, double t, int depth) {
  check_depth(curve, depth);
  if (depth > kMaxAnalyticDepth) throw CapabilityError("chain rule bank stops at depth 4");
  const Branch b = branch_at(exc, t);
  const double x = excite(exc, t, 0);
  std::array<double, 5> fd{}, xd{};
  for (int k = 0; k <= depth; ++k) {
    fd[static_cast<std::size_t>(k)] = curve.derivative(x, k, b);
    xd[static_cast<std::size_t>(k)] = excite(exc, t, k);
  }
  return chain_formula(fd, xd, depth);
}

PlaneState chain_state(const ConstitutiveCurve& curve, const Excitation& exc, double t, int depth) {
  PlaneState s;
  s.u = excite(exc, t, depth);
  s.du = excite(exc, t, depth + 1);
  s.w = chain_ordinate(curve, exc, t, depth);
  if (depth + 1 <= kMaxAnalyticDepth && depth + 1 <= curve.max_derivative_order()) {
    s.dw = chain_ordinate(curve, exc, t, depth + 1);
  } else {
    const double h = 1e-5 / exc.omega;
    s.dw = (chain_ordinate(curve, exc, t + h, depth) - chain_ordinate(curve, exc, t - h, depth)) /
           (2.0 * h);
  }
  return s;
}

std::pair<std::string, std::string> generic_axis_labels(int depth) {
  return {"x" + primes(depth), "y" + primes(depth)};
}

ParametricLocus analytic_locus(const ConstitutiveCurve& curve, const Excitation& exc, int depth,
                               const SampleGrid& grid,
                               std::optional<std::pair<std::string, std::string>> labels) {
  check_depth(curve, depth);
  auto axis = labels ? *labels : generic_axis_labels(depth);
  if (depth > kMaxAnalyticDepth) {
    auto base = analytic_locus(curve, exc, kMaxAnalyticDepth, grid);
    for (int d = kMaxAnalyticDepth; d < depth; ++d) base = numeric_transform(base);
    std::vector<double> t(base.t().begin(), base.t().end());
    std::vector<double> u(base.u().begin(), base.u().end());
    std::vector<double> w(base.w().begin(), base.w().end());
    return ParametricLocus(std::move(t), std::move(u), std::move(w), depth, std::move(axis),
                           Provenance::Numeric);
  }

  const auto ts = grid.t_values();
  std::vector<double> t(ts.begin(), ts.end()), u(ts.size()), w(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    u[i] = excite(exc, ts[i], depth);
    w[i] = chain_ordinate(curve, exc, ts[i], depth);
  }
  PlaneSampler sampler = [curve, exc, depth](double tt) {
    return chain_state(curve, exc, tt, depth);
  };
  return ParametricLocus(std::move(t), std::move(u), std::move(w), depth, std::move(axis),
                         Provenance::Analytic, std::move(sampler));
}

ParametricLocus numeric_transform(const ParametricLocus& locus) {
  if (!locus.uniform()) throw NumericalError("numeric_transform: grid is not uniform");
  const auto u = locus.u();
  const auto w = locus.w();
  const std::size_t n = locus.size() - 1;  // last sample repeats the first
  auto check_periodic = [&](std::span<const double> v, const char* name) {
    double scale = 1.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    if (std::abs(v[n] - v[0]) > 1e-9 * scale) {
      std::ostringstream os;
      os << "numeric_transform: " << name << " is not periodic over the grid (" << v[0] << " vs "
         << v[n] << ")";
      throw NumericalError(os.str());
    }
  };
  check_periodic(u, "u");
  check_periodic(w, "w");

  const double h = locus.spacing();
  auto diff = [&](std::span<const double> v) {
    std::vector<double> d(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t next = (i + 1) % n;
      const std::size_t prev = (i + n - 1) % n;
      d[i] = (v[next] - v[prev]) / (2.0 * h);
    }
    d[n] = d[0];
    return d;
  };
  auto [xl, yl] = locus.axis_labels();
  return ParametricLocus(std::vector<double>(locus.t().begin(), locus.t().end()), diff(u), diff(w),
                         locus.depth() + 1, {xl + "'", yl + "'"}, Provenance::Numeric);
}

Projection project_point(const ConstitutiveCurve& curve, const Excitation& exc, double t0,
                         int depth, double pinch_tol) {
  if (depth < 1) throw DomainError("project_point: depth must be >= 1");
  if (t0 < 0.0 || t0 > exc.period()) throw DomainError("project_point: t0 outside one period");
  check_depth(curve, depth);

  Projection p;
  p.t = t0;
  p.u = excite(exc, t0, depth);
  p.w = chain_ordinate(curve, exc, t0, depth);
  p.pinch = std::abs(p.u) <= pinch_tol && std::abs(p.w) <= pinch_tol;
  p.chord_angle = chord_angle(p.u, p.w, pinch_tol);
  if (p.u != 0.0) p.chord_slope = p.w / p.u;

  if (depth == 1) {
    p.tangent_slope = curve.derivative(excite(exc, t0, 0), 1, branch_at(exc, t0));
  } else {
    // Secant of the source locus over a short symmetric step.
    const double h = 1e-6 / exc.omega;
    const double lo = std::max(0.0, t0 - h);
    const double hi = lo + 2.0 * h;
    const double du = excite(exc, hi, depth - 1) - excite(exc, lo, depth - 1);
    const double dw =
        chain_ordinate(curve, exc, hi, depth - 1) - chain_ordinate(curve, exc, lo, depth - 1);
    p.tangent_slope = dw / du;
  }
  p.tangent_angle = std::atan(p.tangent_slope);
  return p;
}

}  // namespace memelem

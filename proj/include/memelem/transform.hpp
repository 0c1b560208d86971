/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "memelem/constitutive.hpp"
#include "memelem/excitation.hpp"
#include "memelem/locus.hpp"

namespace memelem {

/// Deepest level with a closed-form chain-rule expansion. Deeper loci are
/// continued by finite differences.
inline constexpr int kMaxAnalyticDepth = 4;

/// Branch traversed at time t: outgoing for the first half period.
Branch branch_at(const Excitation& exc, double t);

/// d^depth/dt^depth of f(x(t)) by the closed-form chain rule (depth <= 4).
double chain_ordinate(const ConstitutiveCurve& curve, const Excitation& exc, double t, int depth);

/// (u, w) at `depth` and their time derivatives, all analytic where possible.
PlaneState chain_state(const ConstitutiveCurve& curve, const Excitation& exc, double t, int depth);

/// Default axis labels for a plane of the generic x-y chain ("x", "y'", ...).
std::pair<std::string, std::string> generic_axis_labels(int depth);

/// The constitutive curve pushed through `depth` conformal differential
/// transformations: u = x^(depth)(t), w = d^depth/dt^depth f(x(t)).
ParametricLocus analytic_locus(const ConstitutiveCurve& curve, const Excitation& exc, int depth,
                               const SampleGrid& grid,
                               std::optional<std::pair<std::string, std::string>> labels = {});

/// One further transformation by periodic central differences of the samples.
ParametricLocus numeric_transform(const ParametricLocus& locus);

/// A single projected point at t0 together with the slope of the source
/// curve it was projected from.
struct Projection {
  double t = 0.0;
  double u = 0.0;
  double w = 0.0;
  /// atan2(w, u); absent at a pinch.
  std::optional<double> chord_angle;
  bool pinch = false;
  /// w / u; absent when u is zero.
  std::optional<double> chord_slope;
  /// Slope of the source plane (depth - 1) at t0. Depth 1 uses f'(x(t0)).
  double tangent_slope = 0.0;
  double tangent_angle = 0.0;
};

Projection project_point(const ConstitutiveCurve& curve, const Excitation& exc, double t0,
                         int depth, double pinch_tol = 1e-9);

}  // namespace memelem

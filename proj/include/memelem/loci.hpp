/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <vector>

#include "memelem/constitutive.hpp"
#include "memelem/excitation.hpp"
#include "memelem/locus.hpp"
#include "memelem/tolerances.hpp"

namespace memelem {

/// Coordinates and rates at arbitrary t: from the sampler when present,
/// otherwise interpolated from the samples and their central differences.
PlaneState state_at(const ParametricLocus& locus, double t);

/// Ordinate found where the abscissa vanishes.
struct AbscissaZero {
  double t = 0.0;
  double w = 0.0;
};

struct OriginCrossing {
  bool crosses_origin = false;
  std::vector<SpecialPoint> pinches;
  /// Every zero of u with the ordinate there; a nonzero ordinate means the
  /// locus misses the origin at that time.
  std::vector<AbscissaZero> abscissa_zeros;
};

OriginCrossing origin_crossing(const ParametricLocus& locus, double tol);

enum class Valuedness { Single, Double };

struct WitnessPair {
  double t1 = 0.0, t2 = 0.0;
  double u1 = 0.0, u2 = 0.0;
  double w1 = 0.0, w2 = 0.0;
  double difference() const;
};

struct ValuednessReport {
  Valuedness valuedness = Valuedness::Single;
  double max_difference = 0.0;
  /// Largest-difference pairs first, at most kMaxWitnesses.
  std::vector<WitnessPair> witnesses;
  static constexpr std::size_t kMaxWitnesses = 8;
};

/// Compares ordinates of parameter pairs sharing an abscissa under the
/// raised-cosine drive: t <-> T/2 - t for odd depth, t <-> T - t for even.
ValuednessReport valuedness(const ParametricLocus& locus, double tol);

struct SymmetryReport {
  bool odd_symmetric = false;
  double max_violation = 0.0;
};

/// Checks (u, w)(T - t) = -(u, w)(t).
SymmetryReport odd_symmetry(const ParametricLocus& locus, double tol);

/// Points where dw/dt = 0 while du/dt does not vanish.
std::vector<SpecialPoint> zero_tangent_points(const ParametricLocus& locus, double root_tol = 1e-10);

/// Points where du/dt = 0 while dw/dt does not vanish.
std::vector<SpecialPoint> vertical_tangent_points(const ParametricLocus& locus,
                                                  double root_tol = 1e-10);

struct ArcInterval {
  double t_start = 0.0;
  double t_end = 0.0;
  int slope_sign = -1;
};

/// Maximal parameter intervals on which dw/du < 0.
std::vector<ArcInterval> negative_slope_arcs(const ParametricLocus& locus, double root_tol = 1e-10);

enum class PhaseClass { Lag, Advance, None };

struct PhaseReport {
  std::optional<double> t_peak_ordinate;
  std::optional<double> t_peak_abscissa;
  double shift = 0.0;
  PhaseClass classification = PhaseClass::None;
};

/// First-half-cycle peak of the first-order ordinate against the peak of the
/// drive's first derivative.
PhaseReport phase_shift(const ConstitutiveCurve& curve, const Excitation& exc,
                        const ToleranceSet& tol = {},
                        int intervals = SampleGrid::kDefaultIntervals);

std::string to_string(Valuedness v);
std::string to_string(PhaseClass p);

}  // namespace memelem

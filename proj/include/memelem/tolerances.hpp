/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

namespace memelem {

/// Numerical thresholds shared by the ideality checks, locus analysis and
/// classification. Defaults are tuned for loci computed by the analytic path.
struct ToleranceSet {
  double pinch_tol = 1e-9;
  double valuedness_tol = 1e-9;
  double root_tol = 1e-10;
  double slope_tol = 1e-9;
  /// Relative to the ordinate span of the curve over its operating range.
  double nonlin_tol = 1e-9;
  double phase_tol = 1e-6;
  double witness_tol = 1e-8;
  /// Largest slope jump still treated as continuous (piecewise-linear kinks).
  double slope_jump_tol = 1e-9;

  /// Defaults for loci produced by finite differences.
  static ToleranceSet numeric() {
    ToleranceSet t;
    t.pinch_tol = 1e-4;
    t.valuedness_tol = 1e-4;
    t.witness_tol = 1e-3;
    return t;
  }

  /// Throws ConfigError naming the first non-positive field.
  void validate() const;
};

}  // namespace memelem

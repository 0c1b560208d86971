/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <numbers>
#include <span>
#include <vector>

namespace memelem {

/// Raised-cosine drive x(t) = offset - amplitude * cos(omega * t) for t >= 0,
/// zero before. With the defaults this is 1 - cos t, sweeping [0, 2] once per
/// half period and starting from x(0) = 0.
struct Excitation {
  double amplitude = 1.0;
  double omega = 1.0;
  double offset = 1.0;

  double period() const { return 2.0 * std::numbers::pi / omega; }
  /// Throws ConfigError if amplitude or omega is not positive.
  void validate() const;
};

/// `level`-th time derivative of the drive at t (level 0 is the drive itself).
double excite(const Excitation& exc, double t, int level);

/// Uniform samples over exactly one period, both endpoints included.
class SampleGrid {
 public:
  static constexpr int kMinIntervals = 64;
  static constexpr int kDefaultIntervals = 4096;

  SampleGrid(const Excitation& exc, int intervals);

  std::span<const double> t_values() const { return t_; }
  int intervals() const { return static_cast<int>(t_.size()) - 1; }
  std::size_t size() const { return t_.size(); }
  double spacing() const { return period_ / intervals(); }
  double period() const { return period_; }

 private:
  std::vector<double> t_;
  double period_;
};

/// Grid with n intervals (n + 1 samples); n below 64 is a configuration error.
SampleGrid grid(const Excitation& exc, int n = SampleGrid::kDefaultIntervals);

}  // namespace memelem

/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace memelem {

enum class Provenance { Analytic, Numeric };

/// Coordinates and their time derivatives at one parameter value.
struct PlaneState {
  double u = 0.0;
  double w = 0.0;
  double du = 0.0;
  double dw = 0.0;
};

/// Evaluates a locus at arbitrary t. Present on analytically generated loci;
/// the analysis routines use it to refine roots beyond the sample grid.
using PlaneSampler = std::function<PlaneState(double)>;

/// Sampled parametric curve (t, u(t), w(t)) over one period in one plane of
/// the transformation chain. Immutable.
class ParametricLocus {
 public:
  static constexpr std::size_t kMinSamples = 65;

  ParametricLocus(std::vector<double> t, std::vector<double> u, std::vector<double> w, int depth,
                  std::pair<std::string, std::string> axis_labels, Provenance provenance,
                  PlaneSampler sampler = {});

  std::span<const double> t() const { return t_; }
  std::span<const double> u() const { return u_; }
  std::span<const double> w() const { return w_; }
  std::size_t size() const { return t_.size(); }
  int depth() const { return depth_; }
  const std::pair<std::string, std::string>& axis_labels() const { return labels_; }
  Provenance provenance() const { return provenance_; }

  bool has_sampler() const { return static_cast<bool>(sampler_); }
  /// Requires has_sampler().
  PlaneState sample(double t) const;

  double period() const { return t_.back() - t_.front(); }
  double spacing() const { return period() / static_cast<double>(t_.size() - 1); }
  /// True when the sample spacing is uniform to rounding.
  bool uniform() const;

 private:
  std::vector<double> t_, u_, w_;
  int depth_;
  std::pair<std::string, std::string> labels_;
  Provenance provenance_;
  PlaneSampler sampler_;
};

/// Tagged point on a locus.
struct SpecialPoint {
  enum class Kind { Pinch, ZeroTangent, VerticalTangent, ActivityWitness };

  double t = 0.0;
  double u = 0.0;
  double w = 0.0;
  Kind kind = Kind::Pinch;
  /// atan2(w, u); absent at the origin where the angle is undefined.
  std::optional<double> chord_angle;
};

/// atan2(w, u), or nothing when both coordinates are within `tol` of zero.
std::optional<double> chord_angle(double u, double w, double tol = 0.0);
std::string to_string(SpecialPoint::Kind kind);
std::string to_string(Provenance p);

}  // namespace memelem

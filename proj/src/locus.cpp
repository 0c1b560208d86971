/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "memelem/locus.hpp"

#include <cmath>

#include "memelem/errors.hpp"

namespace memelem {

ParametricLocus::ParametricLocus(std::vector<double> t, std::vector<double> u,
                                 std::vector<double> w, int depth,
                                 std::pair<std::string, std::string> axis_labels,
                                 Provenance provenance, PlaneSampler sampler)
    : t_(std::move(t)),
      u_(std::move(u)),
      w_(std::move(w)),
      depth_(depth),
      labels_(std::move(axis_labels)),
      provenance_(provenance),
      sampler_(std::move(sampler)) {
  if (t_.size() != u_.size() || t_.size() != w_.size())
    throw DomainError("locus: t, u and w must have equal length");
  if (t_.size() < kMinSamples) throw DomainError("locus: needs at least 65 samples");
  if (depth_ < 0) throw DomainError("locus: depth must be non-negative");
  for (std::size_t i = 1; i < t_.size(); ++i)
    if (!(t_[i] > t_[i - 1])) throw DomainError("locus: t must be strictly increasing");
}

PlaneState ParametricLocus::sample(double t) const {
  if (!sampler_) throw CapabilityError("locus: no analytic sampler attached");
  return sampler_(t);
}

bool ParametricLocus::uniform() const {
  const double h = spacing();
  for (std::size_t i = 1; i < t_.size(); ++i)
    if (std::abs((t_[i] - t_[i - 1]) - h) > 1e-9 * h) return false;
  return true;
}

std::optional<double> chord_angle(double u, double w, double tol) {
  if (std::abs(u) <= tol && std::abs(w) <= tol) return std::nullopt;
  return std::atan2(w, u);
}

std::string to_string(SpecialPoint::Kind kind) {
  switch (kind) {
    case SpecialPoint::Kind::Pinch: return "pinch";
    case SpecialPoint::Kind::ZeroTangent: return "zero_tangent";
    case SpecialPoint::Kind::VerticalTangent: return "vertical_tangent";
    case SpecialPoint::Kind::ActivityWitness: return "activity_witness";
  }
  return "unknown";
}

std::string to_string(Provenance p) { return p == Provenance::Analytic ? "analytic" : "numeric"; }

}  // namespace memelem

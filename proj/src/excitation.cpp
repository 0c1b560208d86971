/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "memelem/excitation.hpp"

#include <cmath>
#include <string>

#include "memelem/errors.hpp"

namespace memelem {

void Excitation::validate() const {
  if (!(amplitude > 0.0)) throw ConfigError("excitation.amplitude", "must be > 0");
  if (!(omega > 0.0)) throw ConfigError("excitation.omega", "must be > 0");
  if (!std::isfinite(offset)) throw ConfigError("excitation.offset", "must be finite");
}

double excite(const Excitation& exc, double t, int level) {
  if (level < 0) throw DomainError("excite: level must be non-negative");
  if (t < 0.0) return 0.0;
  const double phase = exc.omega * t;
  if (level == 0) return exc.offset - exc.amplitude * std::cos(phase);
  // Derivatives of -cos cycle through sin, cos, -sin, -cos.
  const double scale = exc.amplitude * std::pow(exc.omega, level);
  switch ((level - 1) % 4) {
    case 0: return scale * std::sin(phase);
    case 1: return scale * std::cos(phase);
    case 2: return -scale * std::sin(phase);
    default: return -scale * std::cos(phase);
  }
}

SampleGrid::SampleGrid(const Excitation& exc, int intervals) : period_(exc.period()) {
  if (intervals < kMinIntervals)
    throw ConfigError("grid_n", "must be >= " + std::to_string(kMinIntervals) + ", got " +
                                    std::to_string(intervals));
  t_.resize(static_cast<std::size_t>(intervals) + 1);
  for (int i = 0; i <= intervals; ++i)
    t_[static_cast<std::size_t>(i)] = i == intervals ? period_ : period_ * i / intervals;
}

SampleGrid grid(const Excitation& exc, int n) { return SampleGrid(exc, n); }

}  // namespace memelem

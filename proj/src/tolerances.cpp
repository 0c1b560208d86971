/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "memelem/tolerances.hpp"

#include "memelem/errors.hpp"

namespace memelem {

void ToleranceSet::validate() const {
  const std::pair<const char*, double> fields[] = {
      {"pinch_tol", pinch_tol},   {"valuedness_tol", valuedness_tol}, {"root_tol", root_tol},
      {"slope_tol", slope_tol},   {"nonlin_tol", nonlin_tol},         {"phase_tol", phase_tol},
      {"witness_tol", witness_tol}, {"slope_jump_tol", slope_jump_tol},
  };
  for (const auto& [name, value] : fields)
    if (!(value > 0.0)) throw ConfigError(std::string("tolerances.") + name, "must be > 0");
}

}  // namespace memelem

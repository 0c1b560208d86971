/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cmath>
#include <sstream>

#include "memelem/errors.hpp"

namespace memelem::detail {

/// Bisection on a bracketing interval. Runs until the interval cannot be
/// halved in double precision, which is far below any root tolerance we use.
template <typename F>
double bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    std::ostringstream os;
    os << "bisection: no sign change on [" << lo << ", " << hi << "] (f = " << flo << ", " << fhi
       << ")";
    throw NumericalError(os.str());
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace memelem::detail

/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

/// First-order ordinate of rho = sigma + sigma^3 / 3 under sigma = 1 - cos t.
inline double cubic_phi(double t) {
  const double s = 1.0 - std::cos(t);
  return (1.0 + s * s) * std::sin(t);
}

/// First-order ordinate of rho = tanh(sigma).
inline double tanh_phi(double t) {
  const double c = std::cosh(1.0 - std::cos(t));
  return std::sin(t) / (c * c);
}

/// Argmax of f on [a, b] by exhaustive scan over `points` samples.
inline double scan_argmax(const std::function<double(double)>& f, double a, double b,
                          int points = 1'000'000) {
  double best_t = a, best = f(a);
  for (int i = 1; i <= points; ++i) {
    const double t = a + (b - a) * i / points;
    const double v = f(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  return best_t;
}

/// Plain bisection, kept separate from the library's root finder.
inline double bisection(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Second derivative of tanh by a fourth-order central stencil.
inline double tanh_second_derivative(double x, double h = 1e-3) {
  auto f = [](double v) { return std::tanh(v); };
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

/// Random strictly increasing polynomial on [0, 2]: zero constant term,
/// positive remaining coefficients, degree 3 or 5.
inline std::vector<double> random_monotone_polynomial(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(0.05, 2.0);
  std::bernoulli_distribution quintic(0.5);
  const int degree = quintic(rng) ? 5 : 3;
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int k = 1; k <= degree; ++k) c[static_cast<std::size_t>(k)] = coef(rng);
  return c;
}

}  // namespace oracle

/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>
#include <random>

#include "memelem/errors.hpp"
#include "memelem/transform.hpp"
#include "oracles.hpp"

using namespace memelem;
using oracle::pi;

namespace {
const auto kCubic = ConstitutiveCurve::polynomial({0.0, 1.0, 0.0, 1.0 / 3.0});
const auto kTanh = ConstitutiveCurve::tanh_scaled(1.0, 1.0);
const auto kLine = ConstitutiveCurve::polynomial({0.0, 1.0});
const Excitation kExc;

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}
}  // namespace

TEST_CASE("analytic_locus point values") {
  const auto g = grid(kExc, 4096);
  SUBCASE("cubic depth 2 at t = pi/2") {
    const auto l = analytic_locus(kCubic, kExc, 2, g);
    CHECK(std::abs(l.u()[1024]) < 1e-15);
    CHECK(l.w()[1024] == doctest::Approx(2.0).epsilon(1e-14));
  }
  SUBCASE("tanh depth 2 at t = pi/2 matches the finite-difference f''(1)") {
    const auto l = analytic_locus(kTanh, kExc, 2, g);
    const double expected = oracle::tanh_second_derivative(1.0);
    CHECK(std::abs(expected - (-0.6397000084492245)) < 1e-9);
    CHECK(l.w()[1024] == doctest::Approx(expected).epsilon(1e-9));
  }
  SUBCASE("line depth 1 is w = u") {
    const auto l = analytic_locus(kLine, kExc, 1, g);
    CHECK(max_abs_diff(l.u(), l.w()) < 1e-15);
  }
  SUBCASE("depth 0 reproduces the constitutive curve") {
    const auto l = analytic_locus(kCubic, kExc, 0, g);
    for (std::size_t i = 0; i < l.size(); i += 97) {
      CHECK(l.u()[i] == 1.0 - std::cos(l.t()[i]));
      CHECK(l.w()[i] == kCubic.eval(l.u()[i]));
    }
  }
  SUBCASE("closed-form first-order waveforms") {
    const auto lc = analytic_locus(kCubic, kExc, 1, g);
    const auto lt = analytic_locus(kTanh, kExc, 1, g);
    for (std::size_t i = 0; i < lc.size(); ++i) {
      CHECK(std::abs(lc.w()[i] - oracle::cubic_phi(lc.t()[i])) < 1e-12);
      CHECK(std::abs(lt.w()[i] - oracle::tanh_phi(lt.t()[i])) < 1e-12);
    }
  }
}

TEST_CASE("analytic_locus respects the derivative capability") {
  const auto c = ConstitutiveCurve::polynomial({0.0, 1.0, 0.0, 1.0}, {}, 2);
  CHECK_THROWS_AS(analytic_locus(c, kExc, 3, grid(kExc, 64)), CapabilityError);
}

TEST_CASE("depth beyond the formula bank continues numerically") {
  const auto c = ConstitutiveCurve::polynomial({0.0, 1.0, 0.5, 0.2, 0.1, 0.05}, {}, 6);
  const auto l = analytic_locus(c, kExc, 5, grid(kExc, 4096));
  CHECK(l.provenance() == Provenance::Numeric);
  CHECK(l.depth() == 5);
  CHECK_FALSE(l.has_sampler());
}

TEST_CASE("chain formulas agree with repeated finite differences in t") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ts(0.2, 6.0);
  const auto c = ConstitutiveCurve::polynomial(oracle::random_monotone_polynomial(rng));
  for (int trial = 0; trial < 50; ++trial) {
    const double t = ts(rng);
    for (int d = 1; d <= 4; ++d) {
      const double fd = oracle::central_difference(
          [&](double s) { return chain_ordinate(c, kExc, s, d - 1); }, t, 1e-5);
      const double exact = chain_ordinate(c, kExc, t, d);
      CHECK(std::abs(fd - exact) < 1e-5 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("numeric_transform examples") {
  const auto g = grid(kExc, 4096);
  std::vector<double> t(g.t_values().begin(), g.t_values().end()), u(t.size()), w(t.size()),
      c(t.size(), 3.5);
  for (std::size_t i = 0; i < t.size(); ++i) {
    u[i] = 1.0 - std::cos(t[i]);
    w[i] = 2.0 * u[i];
  }
  SUBCASE("slope-2 line stays a slope-2 line") {
    const ParametricLocus l(t, u, w, 0, {"x", "y"}, Provenance::Numeric);
    const auto d = numeric_transform(l);
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(std::abs(d.w()[i] - 2.0 * d.u()[i]) < 1e-12);
    CHECK(d.depth() == 1);
    CHECK(d.provenance() == Provenance::Numeric);
  }
  SUBCASE("constant ordinate differentiates to zero") {
    const ParametricLocus l(t, u, c, 0, {"x", "y"}, Provenance::Numeric);
    const auto d = numeric_transform(l);
    for (double v : d.w()) CHECK(std::abs(v) < 1e-9);
  }
  SUBCASE("cubic depth 0 -> 1 matches the analytic path") {
    const auto d = numeric_transform(analytic_locus(kCubic, kExc, 0, g));
    const auto a = analytic_locus(kCubic, kExc, 1, g);
    CHECK(max_abs_diff(d.w(), a.w()) < 1e-3);
    CHECK(max_abs_diff(d.u(), a.u()) < 1e-3);
  }
  SUBCASE("non-uniform grid is rejected") {
    auto tt = t;
    tt[10] += 1e-4;
    const ParametricLocus l(tt, u, w, 0, {"x", "y"}, Provenance::Numeric);
    CHECK_THROWS_AS(numeric_transform(l), NumericalError);
  }
}

TEST_CASE("project_point") {
  SUBCASE("cubic at pi/2") {
    const auto p = project_point(kCubic, kExc, pi / 2, 1);
    CHECK(p.u == doctest::Approx(1.0));
    CHECK(p.w == doctest::Approx(2.0));
    REQUIRE(p.chord_slope);
    CHECK(*p.chord_slope == doctest::Approx(2.0));
    CHECK(p.tangent_slope == doctest::Approx(kCubic.derivative(1.0, 1)));
    CHECK_FALSE(p.pinch);
  }
  SUBCASE("line gives chord slope 1") {
    for (double t0 : {0.3, 1.0, 2.5, 4.0}) CHECK(*project_point(kLine, kExc, t0, 1).chord_slope == doctest::Approx(1.0));
  }
  SUBCASE("pinch at pi") {
    const auto p = project_point(kCubic, kExc, pi, 1);
    CHECK(p.pinch);
    CHECK_FALSE(p.chord_angle);
  }
  SUBCASE("depth 2 tangent slope from the source locus") {
    const auto p = project_point(kCubic, kExc, 1.0, 2);
    CHECK(p.tangent_slope == doctest::Approx(*p.chord_slope).epsilon(1e-6));
  }
}

TEST_CASE("property: conformality of the first transformation") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ts(0.0, 2 * pi);
  for (const auto& c : {kCubic, kTanh, ConstitutiveCurve::polynomial({0.0, 0.5, 0.3, 0.2, 0.1})}) {
    int checked = 0;
    while (checked < 100) {
      const double t = ts(rng);
      const auto p = project_point(c, kExc, t, 1);
      if (std::abs(p.u) <= 0.05) continue;
      ++checked;
      CHECK(std::abs(p.tangent_slope - *p.chord_slope) <= 1e-9 * std::abs(p.tangent_slope));
    }
  }
}

TEST_CASE("property: depth-1 anti-symmetry and depth-2 single-valuedness") {
  std::mt19937_64 rng(21);
  const auto g = grid(kExc, 4096);
  const std::size_t n = 4096;
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = ConstitutiveCurve::polynomial(oracle::random_monotone_polynomial(rng));
    const auto l1 = analytic_locus(c, kExc, 1, g);
    const auto l2 = analytic_locus(c, kExc, 2, g);
    for (std::size_t i = 0; i <= n; ++i) {
      CHECK(std::abs(l1.u()[n - i] + l1.u()[i]) < 1e-9);
      CHECK(std::abs(l1.w()[n - i] + l1.w()[i]) < 1e-9);
      CHECK(std::abs(l2.w()[n - i] - l2.w()[i]) < 1e-9);
    }
    // Depth 1 is double-valued: t and pi - t share u but not w.
    for (std::size_t i = 1; i < n / 4; i += 37) CHECK(std::abs(l1.w()[i] - l1.w()[n / 2 - i]) > 0.0);
  }
}

TEST_CASE("two-branch loci switch branch at half period") {
  const auto tb = ConstitutiveCurve::two_branch(kCubic, ConstitutiveCurve::polynomial({0.0, 2.0, 0.0, 1.0 / 12.0}));
  const auto l = analytic_locus(tb, kExc, 1, grid(kExc, 4096));
  // t = pi/2 (outgoing): f_out'(1) = 2; t = 3pi/2 (returning): -f_ret'(1) = -(2 + 1/4).
  CHECK(l.w()[1024] == doctest::Approx(2.0));
  CHECK(l.w()[3072] == doctest::Approx(-2.25));
  CHECK(std::abs(l.w()[2048]) < 1e-12);
}

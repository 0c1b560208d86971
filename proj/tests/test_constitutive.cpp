/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>
#include <random>

#include "memelem/constitutive.hpp"
#include "memelem/errors.hpp"
#include "oracles.hpp"

using namespace memelem;

namespace {
const auto kCubic = ConstitutiveCurve::polynomial({0.0, 1.0, 0.0, 1.0 / 3.0});
const auto kFlatMidpoint = ConstitutiveCurve::polynomial({0.0, 0.0, 0.5, -1.0 / 6.0});
const auto kTanh = ConstitutiveCurve::tanh_scaled(1.0, 1.0);
const auto kLine = ConstitutiveCurve::polynomial({0.0, 1.0});

ConstitutiveCurve asymmetric_two_branch() {
  return ConstitutiveCurve::two_branch(ConstitutiveCurve::polynomial({0.0, 1.0, 0.0, 1.0 / 3.0}),
                                       ConstitutiveCurve::polynomial({0.0, 2.0, 0.0, 1.0 / 12.0}));
}
}  // namespace

TEST_CASE("eval on closed-form families") {
  CHECK(kCubic.eval(1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(kTanh.eval(0.0) == 0.0);
  CHECK(kFlatMidpoint.eval(2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(ConstitutiveCurve::logistic().eval(0.0) == doctest::Approx(0.5));
}

TEST_CASE("eval outside the operating range is a domain error") {
  CHECK_THROWS_AS(kCubic.eval(2.5), DomainError);
  CHECK_THROWS_AS(kCubic.eval(-0.1), DomainError);
}

TEST_CASE("derivatives") {
  CHECK(kCubic.derivative(1.0, 2) == doctest::Approx(2.0));
  CHECK(kTanh.derivative(0.0, 1) == doctest::Approx(1.0));
  CHECK(kFlatMidpoint.derivative(1.0, 2) == 0.0);
  CHECK(kTanh.derivative(1.0, 2) == doctest::Approx(oracle::tanh_second_derivative(1.0)).epsilon(1e-9));
  CHECK(kCubic.derivative(0.5, 4) == 0.0);
}

TEST_CASE("derivative beyond max order is a capability error") {
  const auto c = ConstitutiveCurve::polynomial({0.0, 1.0, 1.0}, {}, 2);
  CHECK_NOTHROW(c.derivative(1.0, 2));
  CHECK_THROWS_AS(c.derivative(1.0, 3), CapabilityError);
}

TEST_CASE("piecewise-linear kinks are flagged one-sided") {
  const auto pw = ConstitutiveCurve::piecewise_linear({{0.0, 0.0}, {1.0, 1.0}, {2.0, 3.0}});
  CHECK(pw.eval(0.5) == doctest::Approx(0.5));
  CHECK(pw.eval(1.5) == doctest::Approx(2.0));
  const auto d = pw.derivative_checked(1.0, 1);
  CHECK(d.at_kink);
  CHECK(d.value == doctest::Approx(2.0));
  CHECK_FALSE(pw.derivative_checked(0.5, 1).at_kink);
  CHECK_THROWS_AS(ConstitutiveCurve::piecewise_linear({{0.0, 0.0}, {0.0, 1.0}}), DomainError);

  const auto rep = check_ideality(pw);
  CHECK_FALSE(rep.continuously_differentiable);
  REQUIRE(rep.worst_slope_jump_at);
  CHECK(*rep.worst_slope_jump_at == 1.0);
  CHECK_FALSE(rep.ideal);
}

TEST_CASE("two-branch curves need a branch tag and matching endpoints") {
  const auto tb = asymmetric_two_branch();
  CHECK_THROWS_AS(tb.eval(1.0), DomainError);
  CHECK(tb.eval(1.0, Branch::Outgoing) == doctest::Approx(4.0 / 3.0));
  CHECK(tb.eval(1.0, Branch::Returning) == doctest::Approx(2.0 + 1.0 / 12.0));
  CHECK_THROWS_AS(ConstitutiveCurve::two_branch(kCubic, kTanh), DomainError);
}

TEST_CASE("invalid operating range") {
  CHECK_THROWS_AS(ConstitutiveCurve::polynomial({0.0, 1.0}, {1.0, 1.0}), DomainError);
}

TEST_CASE("check_ideality examples") {
  SUBCASE("cubic is ideal") {
    const auto r = check_ideality(kCubic);
    CHECK(r.ideal);
    CHECK(r.zero_derivative_points.empty());
  }
  SUBCASE("affine curve is not nonlinear") {
    const auto r = check_ideality(kLine);
    CHECK_FALSE(r.nonlinear);
    CHECK_FALSE(r.ideal);
    CHECK(r.strictly_monotone_increasing);
  }
  SUBCASE("two distinct branches are not single-valued") {
    const auto r = check_ideality(asymmetric_two_branch());
    CHECK_FALSE(r.single_valued);
    REQUIRE(r.multivalued_at);
    CHECK(*r.multivalued_at > 0.0);
    CHECK(*r.multivalued_at < 2.0);
    CHECK_FALSE(r.ideal);
  }
  SUBCASE("tanh is ideal") { CHECK(check_ideality(kTanh).ideal); }
  SUBCASE("isolated flat points are allowed") {
    const auto r = check_ideality(kFlatMidpoint);
    CHECK(r.strictly_monotone_increasing);
    CHECK(r.ideal);
    REQUIRE(r.zero_derivative_points.size() == 2);
    CHECK(r.zero_derivative_points.front() == 0.0);
    CHECK(r.zero_derivative_points.back() == 2.0);
  }
  SUBCASE("decreasing region is reported") {
    // f = (x^3 - x) / 2 falls until x = 1/sqrt(3).
    const auto c = ConstitutiveCurve::polynomial({0.0, -0.5, 0.0, 0.5});
    const auto r = check_ideality(c);
    CHECK_FALSE(r.strictly_monotone_increasing);
    REQUIRE(r.violating_interval);
    CHECK(r.violating_interval->first == 0.0);
    CHECK(r.violating_interval->second < std::sqrt(1.0 / 3.0));
  }
}

TEST_CASE("mvt_point examples") {
  CHECK(mvt_point(ConstitutiveCurve::polynomial({0.0, 0.0, 1.0}), 0.0, 2.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Frozen from the bisection oracle on 1 + c^2 = 7/3.
  const double oracle_c =
      oracle::bisection([](double c) { return 1.0 + c * c - 7.0 / 3.0; }, 0.0, 2.0);
  CHECK(std::abs(oracle_c - 2.0 / std::sqrt(3.0)) < 1e-14);
  CHECK(std::abs(mvt_point(kCubic, 0.0, 2.0) - oracle_c) < 1e-9);
  CHECK(mvt_point(kLine, 0.0, 2.0) == 1.0);
  CHECK_THROWS_AS(mvt_point(kCubic, 1.0, 1.0), DomainError);
}

TEST_CASE("mvt_point without a parallel tangent is a numerical error") {
  const auto pw = ConstitutiveCurve::piecewise_linear({{0.0, 0.0}, {1.0, 1.0}, {2.0, 3.0}});
  CHECK_THROWS_AS(mvt_point(pw, 0.0, 2.0), NumericalError);
}

TEST_CASE("property: derivative k matches finite difference of derivative k-1") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xs(0.1, 1.9);
  const std::vector<ConstitutiveCurve> curves{
      kCubic, kTanh, ConstitutiveCurve::tanh_scaled(1.5, 0.7), ConstitutiveCurve::logistic(),
      ConstitutiveCurve::polynomial(oracle::random_monotone_polynomial(rng))};
  for (const auto& c : curves) {
    for (int trial = 0; trial < 100; ++trial) {
      const double x = xs(rng);
      for (int k = 1; k <= 4; ++k) {
        const double fd =
            oracle::central_difference([&](double v) { return c.derivative(v, k - 1); }, x, 1e-5);
        const double exact = c.derivative(x, k);
        CAPTURE(c.describe());
        CAPTURE(k);
        CAPTURE(x);
        CHECK(std::abs(exact - fd) <= 1e-5 * std::max(1.0, std::abs(exact)));
      }
    }
  }
}

TEST_CASE("property: monotone verdict implies ordered samples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = ConstitutiveCurve::polynomial(oracle::random_monotone_polynomial(rng));
    const auto r = check_ideality(c);
    REQUIRE(r.strictly_monotone_increasing);
    const double step = 2.0 / 4096;
    double prev = c.eval(0.0);
    for (int i = 1; i <= 4096; i += 3) {
      const double y = c.eval(i * step);
      CHECK(y > prev);
      prev = y;
    }
  }
}

TEST_CASE("property: affine curves are never nonlinear") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> slope(0.01, 10.0);
  for (int trial = 0; trial < 20; ++trial)
    CHECK_FALSE(check_ideality(ConstitutiveCurve::polynomial({0.0, slope(rng)})).nonlinear);
}

TEST_CASE("property: mvt point lies inside the interval and satisfies the secant identity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ends(0.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = ConstitutiveCurve::polynomial(oracle::random_monotone_polynomial(rng));
    double a = ends(rng), b = ends(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) continue;
    const double m = mvt_point(c, a, b);
    CHECK(m > a);
    CHECK(m < b);
    const double secant = (c.eval(b) - c.eval(a)) / (b - a);
    CHECK(std::abs(c.derivative(m, 1) - secant) < 1e-10 * std::max(1.0, secant));
  }
}

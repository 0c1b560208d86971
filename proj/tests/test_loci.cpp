/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "memelem/loci.hpp"
#include "memelem/transform.hpp"
#include "oracles.hpp"

using namespace memelem;
using oracle::pi;

namespace {
const auto kCubic = ConstitutiveCurve::polynomial({0.0, 1.0, 0.0, 1.0 / 3.0});
const auto kTanh = ConstitutiveCurve::tanh_scaled(1.0, 1.0);
const auto kLine = ConstitutiveCurve::polynomial({0.0, 1.0});
const Excitation kExc;
const auto kGrid = grid(kExc, 4096);

double cubic_tc() {
  return oracle::bisection(
      [](double t) { return oracle::central_difference(oracle::cubic_phi, t, 1e-7); }, pi / 2, pi);
}
double tanh_tc() {
  return oracle::bisection(
      [](double t) {
        return std::cos(t) - 2.0 * std::tanh(1.0 - std::cos(t)) * std::sin(t) * std::sin(t);
      },
      0.0, pi / 2);
}

ParametricLocus circle() {
  const auto ts = kGrid.t_values();
  std::vector<double> t(ts.begin(), ts.end()), u(t.size()), w(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    u[i] = std::sin(t[i]);
    w[i] = std::cos(t[i]);
  }
  PlaneSampler s = [](double tt) {
    return PlaneState{std::sin(tt), std::cos(tt), std::cos(tt), -std::sin(tt)};
  };
  return ParametricLocus(t, u, w, 1, {"u", "w"}, Provenance::Analytic, s);
}

bool contains_near(const std::vector<SpecialPoint>& pts, double t, double tol) {
  return std::any_of(pts.begin(), pts.end(), [&](const auto& p) { return std::abs(p.t - t) <= tol; });
}
}  // namespace

TEST_CASE("oracle sanity: scan and bisection agree on C'") {
  CHECK(std::abs(cubic_tc() - oracle::scan_argmax(oracle::cubic_phi, pi / 2, pi)) < 1e-5);
  CHECK(std::abs(tanh_tc() - oracle::scan_argmax(oracle::tanh_phi, 0.0, pi / 2)) < 1e-5);
  CHECK(cubic_tc() == doctest::Approx(2.2006).epsilon(1e-4));
  CHECK(tanh_tc() == doctest::Approx(0.973).epsilon(1e-3));
}

TEST_CASE("origin_crossing") {
  SUBCASE("first-order cubic pinches at 0, pi, 2pi") {
    const auto oc = origin_crossing(analytic_locus(kCubic, kExc, 1, kGrid), 1e-9);
    CHECK(oc.crosses_origin);
    REQUIRE(oc.pinches.size() == 3);
    CHECK(oc.pinches[0].t == 0.0);
    CHECK(oc.pinches[1].t == doctest::Approx(pi).epsilon(1e-14));
    CHECK(oc.pinches[2].t == doctest::Approx(2 * pi).epsilon(1e-14));
    for (const auto& p : oc.pinches) CHECK_FALSE(p.chord_angle);
  }
  SUBCASE("second-order cubic avoids the origin") {
    const auto oc = origin_crossing(analytic_locus(kCubic, kExc, 2, kGrid), 1e-9);
    CHECK_FALSE(oc.crosses_origin);
    REQUIRE(oc.abscissa_zeros.size() == 2);
    CHECK(oc.abscissa_zeros[0].t == doctest::Approx(pi / 2));
    CHECK(oc.abscissa_zeros[1].t == doctest::Approx(3 * pi / 2));
    for (const auto& z : oc.abscissa_zeros) CHECK(z.w == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("line passes the origin") {
    CHECK(origin_crossing(analytic_locus(kLine, kExc, 1, kGrid), 1e-9).crosses_origin);
  }
}

TEST_CASE("valuedness") {
  SUBCASE("first-order cubic is double-valued") {
    const auto l = analytic_locus(kCubic, kExc, 1, kGrid);
    const auto v = valuedness(l, 1e-9);
    CHECK(v.valuedness == Valuedness::Double);
    REQUIRE_FALSE(v.witnesses.empty());
    // Independent substitution at t = pi/4 and 3pi/4.
    const double w1 = oracle::cubic_phi(pi / 4), w2 = oracle::cubic_phi(3 * pi / 4);
    CHECK(w1 == doctest::Approx(0.7677669529663688));
    CHECK(w2 == doctest::Approx(2.767766952966369));
    CHECK(l.u()[512] == doctest::Approx(l.u()[1536]));
    CHECK(l.w()[512] == doctest::Approx(w1));
    CHECK(l.w()[1536] == doctest::Approx(w2));
  }
  SUBCASE("second-order cubic is single-valued") {
    CHECK(valuedness(analytic_locus(kCubic, kExc, 2, kGrid), 1e-9).valuedness == Valuedness::Single);
  }
  SUBCASE("constitutive plane is single-valued") {
    CHECK(valuedness(analytic_locus(kCubic, kExc, 0, kGrid), 1e-9).valuedness == Valuedness::Single);
  }
}

TEST_CASE("odd_symmetry") {
  const auto l = analytic_locus(kCubic, kExc, 1, kGrid);
  CHECK(l.w()[1024] == doctest::Approx(2.0));
  CHECK(l.w()[3072] == doctest::Approx(-2.0));
  CHECK(odd_symmetry(l, 1e-9).odd_symmetric);
  CHECK(odd_symmetry(analytic_locus(kLine, kExc, 1, kGrid), 1e-9).odd_symmetric);
  const auto tb = ConstitutiveCurve::two_branch(kCubic, ConstitutiveCurve::polynomial({0.0, 2.0, 0.0, 1.0 / 12.0}));
  const auto s = odd_symmetry(analytic_locus(tb, kExc, 1, kGrid), 1e-9);
  CHECK_FALSE(s.odd_symmetric);
  CHECK(s.max_violation > 0.1);
}

TEST_CASE("zero_tangent_points") {
  SUBCASE("cubic") {
    const auto pts = zero_tangent_points(analytic_locus(kCubic, kExc, 1, kGrid));
    CHECK(contains_near(pts, cubic_tc(), 1e-6));
    CHECK(contains_near(pts, 2 * pi - cubic_tc(), 1e-6));
    for (const auto& p : pts) CHECK(p.kind == SpecialPoint::Kind::ZeroTangent);
  }
  SUBCASE("tanh") {
    const auto pts = zero_tangent_points(analytic_locus(kTanh, kExc, 1, kGrid));
    CHECK(contains_near(pts, tanh_tc(), 1e-6));
  }
  SUBCASE("line has none") {
    CHECK(zero_tangent_points(analytic_locus(kLine, kExc, 1, kGrid)).empty());
  }
}

TEST_CASE("vertical_tangent_points") {
  SUBCASE("depth-1 plane of a second-order element") {
    const auto pts = vertical_tangent_points(analytic_locus(kCubic, kExc, 1, kGrid));
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].t == doctest::Approx(pi / 2));
    CHECK(pts[1].t == doctest::Approx(3 * pi / 2));
  }
  SUBCASE("constitutive plane has none") {
    CHECK(vertical_tangent_points(analytic_locus(kCubic, kExc, 0, kGrid)).empty());
  }
  SUBCASE("circle") {
    const auto pts = vertical_tangent_points(circle());
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].t == doctest::Approx(pi / 2));
    CHECK(pts[1].t == doctest::Approx(3 * pi / 2));
  }
}

TEST_CASE("negative_slope_arcs") {
  SUBCASE("cubic: (pi/2, C')") {
    const auto arcs = negative_slope_arcs(analytic_locus(kCubic, kExc, 1, kGrid));
    REQUIRE(arcs.size() == 2);
    CHECK(arcs[0].t_start == doctest::Approx(pi / 2).epsilon(1e-12));
    CHECK(arcs[0].t_end == doctest::Approx(cubic_tc()).epsilon(1e-9));
  }
  SUBCASE("tanh: (C', pi/2)") {
    const auto arcs = negative_slope_arcs(analytic_locus(kTanh, kExc, 1, kGrid));
    REQUIRE_FALSE(arcs.empty());
    CHECK(arcs[0].t_start == doctest::Approx(tanh_tc()).epsilon(1e-9));
    CHECK(arcs[0].t_end == doctest::Approx(pi / 2).epsilon(1e-12));
  }
  SUBCASE("monotone constitutive plane") {
    CHECK(negative_slope_arcs(analytic_locus(kCubic, kExc, 0, kGrid)).empty());
  }
}

TEST_CASE("phase_shift") {
  const auto lag = phase_shift(kCubic, kExc);
  CHECK(lag.classification == PhaseClass::Lag);
  CHECK(lag.shift == doctest::Approx(cubic_tc() - pi / 2).epsilon(1e-8));
  const auto adv = phase_shift(kTanh, kExc);
  CHECK(adv.classification == PhaseClass::Advance);
  CHECK(adv.shift == doctest::Approx(tanh_tc() - pi / 2).epsilon(1e-8));
  CHECK(phase_shift(kLine, kExc).classification == PhaseClass::None);
}

TEST_CASE("property: arc endpoints are special points") {
  std::mt19937_64 rng(13);
  std::vector<ConstitutiveCurve> curves{kCubic, kTanh};
  for (int i = 0; i < 8; ++i) curves.push_back(ConstitutiveCurve::polynomial(oracle::random_monotone_polynomial(rng)));
  for (const auto& c : curves) {
    for (int depth = 1; depth <= 2; ++depth) {
      const auto l = analytic_locus(c, kExc, depth, kGrid);
      std::vector<SpecialPoint> pts = zero_tangent_points(l);
      for (auto&& p : vertical_tangent_points(l)) pts.push_back(p);
      for (auto&& p : origin_crossing(l, 1e-9).pinches) pts.push_back(p);
      // Arcs may also be cut by the ends of the period.
      pts.push_back({0.0, 0.0, 0.0, SpecialPoint::Kind::Pinch, {}});
      pts.push_back({2 * pi, 0.0, 0.0, SpecialPoint::Kind::Pinch, {}});
      for (const auto& a : negative_slope_arcs(l)) {
        CAPTURE(c.describe());
        CAPTURE(depth);
        CHECK(contains_near(pts, a.t_start, 1e-10));
        CHECK(contains_near(pts, a.t_end, 1e-10));
      }
    }
  }
}

TEST_CASE("property: ideal curves have a zero tangent in the first-order plane") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const auto c = ConstitutiveCurve::polynomial(oracle::random_monotone_polynomial(rng));
    CHECK_FALSE(zero_tangent_points(analytic_locus(c, kExc, 1, kGrid)).empty());
  }
  CHECK_FALSE(zero_tangent_points(analytic_locus(ConstitutiveCurve::logistic(), kExc, 1, kGrid)).empty());
}

TEST_CASE("property: concavity decides lag versus advance") {
  // f'' > 0 throughout: lag and t_C > pi/2.
  std::mt19937_64 rng(19);
  for (int i = 0; i < 10; ++i) {
    const auto c = ConstitutiveCurve::polynomial(oracle::random_monotone_polynomial(rng));
    const auto p = phase_shift(c, kExc);
    CHECK(p.classification == PhaseClass::Lag);
    CHECK(*p.t_peak_ordinate > pi / 2);
  }
  // f'' < 0 throughout: advance.
  for (double b : {0.6, 1.0, 1.5}) {
    const auto p = phase_shift(ConstitutiveCurve::tanh_scaled(1.0, b), kExc);
    CHECK(p.classification == PhaseClass::Advance);
    CHECK(*p.t_peak_ordinate < pi / 2);
  }
}

TEST_CASE("property: first-order pinches sit at the zeros of the drive derivative") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10; ++i) {
    const auto c = ConstitutiveCurve::polynomial(oracle::random_monotone_polynomial(rng));
    const auto oc = origin_crossing(analytic_locus(c, kExc, 1, kGrid), 1e-9);
    REQUIRE(oc.pinches.size() == 3);
    for (const auto& p : oc.pinches) CHECK(std::abs(excite(kExc, p.t, 1)) < 1e-12);
  }
}

TEST_CASE("numeric loci are analysed from samples") {
  const auto l = numeric_transform(analytic_locus(kCubic, kExc, 0, grid(kExc, 16384)));
  const auto oc = origin_crossing(l, 1e-4);
  CHECK(oc.crosses_origin);
  const auto zt = zero_tangent_points(l);
  CHECK(contains_near(zt, cubic_tc(), 1e-3));
}

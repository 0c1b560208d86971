/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "memelem/tolerances.hpp"

namespace memelem {

/// Closed interval of the constitutive abscissa.
struct OperatingRange {
  double min = 0.0;
  double max = 2.0;

  double width() const { return max - min; }
  bool contains(double x) const;
};

/// Which half of a two-branch curve is being traversed. The outgoing branch
/// carries the first half period, the returning branch the second.
enum class Branch { Outgoing, Returning };

/// A derivative value plus whether it was taken at a kink (one-sided).
struct DerivativeValue {
  double value = 0.0;
  bool at_kink = false;
};

/// Time-invariant constitutive relation y = f(x) between two integrated
/// electrical attributes (flux/charge, rho/sigma, ...).
///
/// Instances are immutable. Closed-form families return exact derivatives of
/// any order up to `max_derivative_order()`.
class ConstitutiveCurve {
 public:
  enum class Family { Polynomial, TanhScaled, Logistic, PiecewiseLinear, TwoBranch };

  static constexpr int kDefaultMaxOrder = 6;

  /// f(x) = sum c_k x^k, coefficients in ascending power.
  static ConstitutiveCurve polynomial(std::vector<double> coefficients, OperatingRange range = {},
                                      int max_order = kDefaultMaxOrder);
  /// f(x) = a * tanh(b * x).
  static ConstitutiveCurve tanh_scaled(double a, double b, OperatingRange range = {},
                                       int max_order = kDefaultMaxOrder);
  /// f(x) = 1 / (1 + exp(-x)).
  static ConstitutiveCurve logistic(OperatingRange range = {}, int max_order = kDefaultMaxOrder);
  /// Linear interpolation through knots with strictly increasing abscissae.
  /// The operating range is the knot span.
  static ConstitutiveCurve piecewise_linear(std::vector<std::pair<double, double>> knots,
                                            int max_order = kDefaultMaxOrder);
  /// Outgoing and returning paths. Both must share the operating range and
  /// meet at its endpoints.
  static ConstitutiveCurve two_branch(ConstitutiveCurve outgoing, ConstitutiveCurve returning);

  Family family() const;
  const OperatingRange& range() const { return range_; }
  int max_derivative_order() const { return max_order_; }
  bool is_two_branch() const { return family() == Family::TwoBranch; }

  /// f(x). Two-branch curves need the branch overload.
  double eval(double x) const;
  double eval(double x, Branch branch) const;

  /// k-th derivative; k == 0 is eval.
  double derivative(double x, int k) const;
  double derivative(double x, int k, Branch branch) const;
  DerivativeValue derivative_checked(double x, int k, Branch branch = Branch::Outgoing) const;

  /// Branch of a two-branch curve; single-branch curves return themselves.
  const ConstitutiveCurve& branch(Branch b) const;

  /// Kink abscissae (interior piecewise-linear knots whose slopes differ).
  std::vector<double> kinks() const;

  /// Family-specific numeric parameters, in the order the config schema uses.
  std::vector<double> parameters() const;
  std::string family_name() const;
  std::string describe() const;

  static std::string family_name(Family f);

 private:
  struct Polynomial {
    std::vector<double> coefficients;
  };
  struct TanhScaled {
    double a, b;
  };
  struct Logistic {};
  struct PiecewiseLinear {
    std::vector<std::pair<double, double>> knots;
  };
  struct TwoBranch {
    std::shared_ptr<const ConstitutiveCurve> outgoing, returning;
  };
  using Repr = std::variant<Polynomial, TanhScaled, Logistic, PiecewiseLinear, TwoBranch>;

  ConstitutiveCurve(Repr repr, OperatingRange range, int max_order);
  DerivativeValue single_branch_derivative(double x, int k) const;
  void check_order(int k) const;
  void check_domain(double x) const;

  Repr repr_;
  OperatingRange range_;
  int max_order_;
};

/// Result of the four ideality criteria over a dense abscissa grid.
struct IdealityReport {
  bool single_valued = true;
  std::optional<double> multivalued_at;

  bool nonlinear = false;
  double max_secant_deviation = 0.0;

  bool continuously_differentiable = true;
  std::optional<double> worst_slope_jump_at;
  double worst_slope_jump = 0.0;

  bool strictly_monotone_increasing = false;
  std::optional<std::pair<double, double>> violating_interval;
  std::vector<double> zero_derivative_points;

  bool ideal = false;
};

inline constexpr int kDefaultIdealitySamples = 4097;

IdealityReport check_ideality(const ConstitutiveCurve& curve, const ToleranceSet& tol = {},
                              int samples = kDefaultIdealitySamples);

/// Point c in (a, b) where the tangent is parallel to the secant through the
/// endpoints. Affine curves return the midpoint.
double mvt_point(const ConstitutiveCurve& curve, double a, double b, const ToleranceSet& tol = {},
                 Branch branch = Branch::Outgoing);

}  // namespace memelem

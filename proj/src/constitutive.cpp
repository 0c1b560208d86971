/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "memelem/constitutive.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "memelem/errors.hpp"
#include "roots.hpp"

namespace memelem {

namespace {

// k-th derivative of sum c_j x^j by Horner on the differentiated coefficients.
double poly_derivative(const std::vector<double>& c, double x, int k) {
  if (static_cast<std::size_t>(k) >= c.size()) return 0.0;
  double acc = 0.0;
  for (std::size_t j = c.size(); j-- > static_cast<std::size_t>(k);) {
    double falling = 1.0;
    for (int m = 0; m < k; ++m) falling *= static_cast<double>(j - m);
    acc = acc * x + c[j] * falling;
  }
  return acc;
}

// d^k/dx^k of g(x) where g' = r(g) for a polynomial r. Returns the polynomial
// P_k with g^(k) = P_k(g); P_0(s) = s, P_{k+1} = P_k' * r.
std::vector<double> derivative_in_state(const std::vector<double>& rate, int k) {
  std::vector<double> p{0.0, 1.0};
  for (int step = 0; step < k; ++step) {
    std::vector<double> dp(p.size() > 1 ? p.size() - 1 : 1, 0.0);
    for (std::size_t j = 1; j < p.size(); ++j) dp[j - 1] = p[j] * static_cast<double>(j);
    std::vector<double> next(dp.size() + rate.size() - 1, 0.0);
    for (std::size_t i = 0; i < dp.size(); ++i)
      for (std::size_t j = 0; j < rate.size(); ++j) next[i + j] += dp[i] * rate[j];
    p = std::move(next);
  }
  return p;
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + c[j];
  return acc;
}

}  // namespace

bool OperatingRange::contains(double x) const {
  const double slack = 1e-12 * std::max(1.0, width());
  return x >= min - slack && x <= max + slack;
}

ConstitutiveCurve::ConstitutiveCurve(Repr repr, OperatingRange range, int max_order)
    : repr_(std::move(repr)), range_(range), max_order_(max_order) {
  if (!(range_.min < range_.max))
    throw DomainError("constitutive curve: operating range must satisfy x_min < x_max");
  if (max_order_ < 1) throw DomainError("constitutive curve: max_derivative_order must be >= 1");
}

ConstitutiveCurve ConstitutiveCurve::polynomial(std::vector<double> coefficients,
                                                OperatingRange range, int max_order) {
  if (coefficients.empty()) coefficients.push_back(0.0);
  return ConstitutiveCurve(Polynomial{std::move(coefficients)}, range, max_order);
}

ConstitutiveCurve ConstitutiveCurve::tanh_scaled(double a, double b, OperatingRange range,
                                                 int max_order) {
  return ConstitutiveCurve(TanhScaled{a, b}, range, max_order);
}

ConstitutiveCurve ConstitutiveCurve::logistic(OperatingRange range, int max_order) {
  return ConstitutiveCurve(Logistic{}, range, max_order);
}

ConstitutiveCurve ConstitutiveCurve::piecewise_linear(std::vector<std::pair<double, double>> knots,
                                                      int max_order) {
  if (knots.size() < 2) throw DomainError("piecewise-linear curve needs at least two knots");
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i].first > knots[i - 1].first))
      throw DomainError("piecewise-linear knots must be strictly increasing in x");
  OperatingRange range{knots.front().first, knots.back().first};
  return ConstitutiveCurve(PiecewiseLinear{std::move(knots)}, range, max_order);
}

ConstitutiveCurve ConstitutiveCurve::two_branch(ConstitutiveCurve outgoing,
                                                ConstitutiveCurve returning) {
  if (outgoing.is_two_branch() || returning.is_two_branch())
    throw DomainError("two-branch curve: branches must be single-branch curves");
  const auto ro = outgoing.range();
  const auto rr = returning.range();
  if (ro.min != rr.min || ro.max != rr.max)
    throw DomainError("two-branch curve: branches must share the operating range");
  const double scale = std::max({1.0, std::abs(outgoing.eval(ro.max)), std::abs(returning.eval(ro.max))});
  for (double x : {ro.min, ro.max}) {
    if (std::abs(outgoing.eval(x) - returning.eval(x)) > 1e-12 * scale)
      throw DomainError("two-branch curve: branches must meet at the operating range endpoints");
  }
  const int order = std::min(outgoing.max_derivative_order(), returning.max_derivative_order());
  TwoBranch tb{std::make_shared<const ConstitutiveCurve>(std::move(outgoing)),
               std::make_shared<const ConstitutiveCurve>(std::move(returning))};
  return ConstitutiveCurve(std::move(tb), ro, order);
}

ConstitutiveCurve::Family ConstitutiveCurve::family() const {
  return static_cast<Family>(repr_.index());
}

std::string ConstitutiveCurve::family_name(Family f) {
  switch (f) {
    case Family::Polynomial: return "polynomial";
    case Family::TanhScaled: return "tanh_scaled";
    case Family::Logistic: return "logistic";
    case Family::PiecewiseLinear: return "piecewise_linear";
    case Family::TwoBranch: return "two_branch";
  }
  return "unknown";
}

std::string ConstitutiveCurve::family_name() const { return family_name(family()); }

const ConstitutiveCurve& ConstitutiveCurve::branch(Branch b) const {
  if (const auto* tb = std::get_if<TwoBranch>(&repr_))
    return b == Branch::Outgoing ? *tb->outgoing : *tb->returning;
  return *this;
}

void ConstitutiveCurve::check_order(int k) const {
  if (k < 0) throw DomainError("derivative order must be non-negative");
  if (k > max_order_) {
    std::ostringstream os;
    os << "derivative order " << k << " exceeds max_derivative_order " << max_order_;
    throw CapabilityError(os.str());
  }
}

void ConstitutiveCurve::check_domain(double x) const {
  if (!range_.contains(x)) {
    std::ostringstream os;
    os << "x = " << x << " outside operating range [" << range_.min << ", " << range_.max << "]";
    throw DomainError(os.str());
  }
}

double ConstitutiveCurve::eval(double x) const { return derivative(x, 0); }

double ConstitutiveCurve::eval(double x, Branch b) const { return derivative(x, 0, b); }

double ConstitutiveCurve::derivative(double x, int k) const {
  if (is_two_branch())
    throw DomainError("two-branch curve: evaluation requires an explicit branch");
  return derivative_checked(x, k).value;
}

double ConstitutiveCurve::derivative(double x, int k, Branch b) const {
  return derivative_checked(x, k, b).value;
}

DerivativeValue ConstitutiveCurve::derivative_checked(double x, int k, Branch b) const {
  check_order(k);
  check_domain(x);
  if (const auto* tb = std::get_if<TwoBranch>(&repr_)) {
    const auto& br = b == Branch::Outgoing ? *tb->outgoing : *tb->returning;
    return br.single_branch_derivative(x, k);
  }
  return single_branch_derivative(x, k);
}

DerivativeValue ConstitutiveCurve::single_branch_derivative(double x, int k) const {
  return std::visit(
      [&](const auto& f) -> DerivativeValue {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          return {poly_derivative(f.coefficients, x, k), false};
        } else if constexpr (std::is_same_v<T, TanhScaled>) {
          // tanh' = 1 - tanh^2
          const auto p = derivative_in_state({1.0, 0.0, -1.0}, k);
          return {f.a * std::pow(f.b, k) * horner(p, std::tanh(f.b * x)), false};
        } else if constexpr (std::is_same_v<T, Logistic>) {
          // s' = s - s^2
          const auto p = derivative_in_state({0.0, 1.0, -1.0}, k);
          return {horner(p, 1.0 / (1.0 + std::exp(-x))), false};
        } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
          const auto& kn = f.knots;
          // Segment j spans [kn[j], kn[j+1]]; points on a knot use the right
          // segment except at the last knot.
          auto it = std::upper_bound(kn.begin(), kn.end(), x,
                                     [](double v, const auto& p) { return v < p.first; });
          std::size_t j = it == kn.begin() ? 0 : static_cast<std::size_t>(it - kn.begin()) - 1;
          j = std::min(j, kn.size() - 2);
          const double slope = (kn[j + 1].second - kn[j].second) / (kn[j + 1].first - kn[j].first);
          bool at_kink = false;
          for (std::size_t m = 1; m + 1 < kn.size(); ++m) {
            if (x == kn[m].first) {
              const double left =
                  (kn[m].second - kn[m - 1].second) / (kn[m].first - kn[m - 1].first);
              at_kink = left != slope;
            }
          }
          if (k == 0) return {kn[j].second + slope * (x - kn[j].first), false};
          if (k == 1) return {slope, at_kink};
          return {0.0, at_kink};
        } else {
          throw DomainError("two-branch curve: evaluation requires an explicit branch");
        }
      },
      repr_);
}

std::vector<double> ConstitutiveCurve::kinks() const {
  std::vector<double> out;
  if (const auto* pw = std::get_if<PiecewiseLinear>(&repr_)) {
    const auto& kn = pw->knots;
    for (std::size_t m = 1; m + 1 < kn.size(); ++m) {
      const double left = (kn[m].second - kn[m - 1].second) / (kn[m].first - kn[m - 1].first);
      const double right = (kn[m + 1].second - kn[m].second) / (kn[m + 1].first - kn[m].first);
      if (left != right) out.push_back(kn[m].first);
    }
  } else if (const auto* tb = std::get_if<TwoBranch>(&repr_)) {
    out = tb->outgoing->kinks();
    auto r = tb->returning->kinks();
    out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

std::vector<double> ConstitutiveCurve::parameters() const {
  return std::visit(
      [](const auto& f) -> std::vector<double> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          return f.coefficients;
        } else if constexpr (std::is_same_v<T, TanhScaled>) {
          return {f.a, f.b};
        } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
          std::vector<double> flat;
          for (const auto& [x, y] : f.knots) {
            flat.push_back(x);
            flat.push_back(y);
          }
          return flat;
        } else {
          return {};
        }
      },
      repr_);
}

std::string ConstitutiveCurve::describe() const {
  std::ostringstream os;
  os << std::setprecision(6);
  if (const auto* tb = std::get_if<TwoBranch>(&repr_)) {
    os << "two_branch(" << tb->outgoing->describe() << " | " << tb->returning->describe() << ")";
    return os.str();
  }
  os << family_name() << "(";
  const auto p = parameters();
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ") on [" << range_.min << ", " << range_.max << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

struct BranchIdeality {
  double max_dev = 0.0;
  double span = 0.0;
  double worst_jump = 0.0;
  std::optional<double> worst_jump_at;
  std::optional<std::pair<double, double>> decreasing;
  std::optional<std::pair<double, double>> longest_flat;
  std::vector<double> flat_points;
  int positive_count = 0;
};

BranchIdeality inspect_branch(const ConstitutiveCurve& c, const ToleranceSet& tol,
                              const std::vector<double>& xs) {
  BranchIdeality r;
  const auto& rg = c.range();
  const double fa = c.eval(rg.min);
  const double fb = c.eval(rg.max);
  const double secant = (fb - fa) / rg.width();
  double lo = fa, hi = fa;
  std::vector<double> slopes(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double y = c.eval(xs[i]);
    lo = std::min(lo, y);
    hi = std::max(hi, y);
    r.max_dev = std::max(r.max_dev, std::abs(y - (fa + secant * (xs[i] - rg.min))));
    slopes[i] = c.derivative(xs[i], 1);
  }
  r.span = hi - lo;

  for (double k : c.kinks()) {
    const double jump =
        std::abs(c.derivative(k, 1) - c.derivative(std::nextafter(k, rg.min), 1));
    if (jump > r.worst_jump) {
      r.worst_jump = jump;
      r.worst_jump_at = k;
    }
  }

  // Runs of decreasing and of flat samples.
  std::optional<std::size_t> dec_start, flat_start;
  std::size_t longest_flat = 0;
  for (std::size_t i = 0; i <= xs.size(); ++i) {
    const bool end = i == xs.size();
    const bool decreasing = !end && slopes[i] < -tol.slope_tol;
    const bool flat = !end && std::abs(slopes[i]) <= tol.slope_tol;
    if (!end && slopes[i] > tol.slope_tol) ++r.positive_count;
    if (flat) r.flat_points.push_back(xs[i]);
    if (decreasing && !dec_start) dec_start = i;
    if (!decreasing && dec_start && !r.decreasing) r.decreasing = {{xs[*dec_start], xs[i - 1]}};
    if (!decreasing) dec_start.reset();
    if (flat && !flat_start) flat_start = i;
    if (!flat && flat_start) {
      if (i - *flat_start > longest_flat) {
        longest_flat = i - *flat_start;
        r.longest_flat = {{xs[*flat_start], xs[i - 1]}};
      }
      flat_start.reset();
    }
  }
  return r;
}

}  // namespace

IdealityReport check_ideality(const ConstitutiveCurve& curve, const ToleranceSet& tol, int samples) {
  if (samples < 2) throw DomainError("check_ideality: need at least two samples");
  const auto& rg = curve.range();
  std::vector<double> xs(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i)
    xs[static_cast<std::size_t>(i)] = i + 1 == samples ? rg.max : rg.min + rg.width() * i / (samples - 1);

  IdealityReport rep;
  std::vector<const ConstitutiveCurve*> branches{&curve};
  if (curve.is_two_branch()) {
    const auto& out = curve.branch(Branch::Outgoing);
    const auto& ret = curve.branch(Branch::Returning);
    branches = {&out, &ret};
    double worst = 0.0;
    for (double x : xs) {
      const double d = std::abs(out.eval(x) - ret.eval(x));
      if (d > worst) {
        worst = d;
        rep.multivalued_at = x;
      }
    }
    rep.single_valued = worst <= tol.valuedness_tol;
    if (rep.single_valued) rep.multivalued_at.reset();
  }

  rep.nonlinear = false;
  rep.strictly_monotone_increasing = true;
  for (const auto* b : branches) {
    const auto r = inspect_branch(*b, tol, xs);
    rep.max_secant_deviation = std::max(rep.max_secant_deviation, r.max_dev);
    if (r.span > 0.0 && r.max_dev > tol.nonlin_tol * r.span) rep.nonlinear = true;
    if (r.worst_jump > rep.worst_slope_jump) {
      rep.worst_slope_jump = r.worst_jump;
      rep.worst_slope_jump_at = r.worst_jump_at;
    }
    const bool enough_positive =
        static_cast<double>(r.positive_count) >= 0.99 * static_cast<double>(xs.size());
    if (r.decreasing || !enough_positive) {
      if (rep.strictly_monotone_increasing)
        rep.violating_interval = r.decreasing ? r.decreasing : r.longest_flat;
      rep.strictly_monotone_increasing = false;
    }
    rep.zero_derivative_points.insert(rep.zero_derivative_points.end(), r.flat_points.begin(),
                                      r.flat_points.end());
  }
  rep.continuously_differentiable = rep.worst_slope_jump <= tol.slope_jump_tol;
  if (rep.continuously_differentiable) rep.worst_slope_jump_at.reset();
  std::sort(rep.zero_derivative_points.begin(), rep.zero_derivative_points.end());
  rep.zero_derivative_points.erase(
      std::unique(rep.zero_derivative_points.begin(), rep.zero_derivative_points.end()),
      rep.zero_derivative_points.end());

  rep.ideal = rep.single_valued && rep.nonlinear && rep.continuously_differentiable &&
              rep.strictly_monotone_increasing;
  return rep;
}

double mvt_point(const ConstitutiveCurve& curve, double a, double b, const ToleranceSet& tol,
                 Branch branch) {
  const auto& c = curve.branch(branch);
  if (!(a < b)) throw DomainError("mvt_point: requires a < b");
  if (!c.range().contains(a) || !c.range().contains(b))
    throw DomainError("mvt_point: interval outside operating range");
  const double secant = (c.eval(b) - c.eval(a)) / (b - a);
  auto residual = [&](double x) { return c.derivative(x, 1) - secant; };

  constexpr int kScan = 4096;
  const double h = (b - a) / kScan;
  const double scale = std::max(1.0, std::abs(secant));
  double worst = 0.0;
  double best_x = 0.5 * (a + b);
  double best_abs = std::abs(residual(best_x));
  std::optional<std::pair<double, double>> bracket;
  // Open interval: skip the endpoints themselves.
  double prev_x = a + 0.5 * h;
  double prev_r = residual(prev_x);
  for (int i = 0; i <= kScan; ++i) {
    const double x = i == 0 ? prev_x : std::min(a + (i + 0.5) * h, b - 0.5 * h);
    const double r = i == 0 ? prev_r : residual(x);
    worst = std::max(worst, std::abs(r));
    if (std::abs(r) < best_abs) {
      best_abs = std::abs(r);
      best_x = x;
    }
    if (!bracket && i > 0 && std::signbit(r) != std::signbit(prev_r)) bracket = {{prev_x, x}};
    prev_x = x;
    prev_r = r;
  }

  if (worst <= tol.root_tol * scale) return 0.5 * (a + b);

  double c_pt = best_x;
  if (bracket) c_pt = detail::bisect(residual, bracket->first, bracket->second);
  const double res = std::abs(residual(c_pt));
  if (!(c_pt > a && c_pt < b) || res >= tol.root_tol * scale) {
    std::ostringstream os;
    os << "mvt_point: no tangent parallel to the secant found on (" << a << ", " << b
       << "); best residual " << res << " at x = " << c_pt << ", secant slope " << secant;
    throw NumericalError(os.str());
  }
  return c_pt;
}

}  // namespace memelem

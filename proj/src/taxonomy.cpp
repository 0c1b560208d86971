/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "memelem/taxonomy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "memelem/errors.hpp"
#include "memelem/transform.hpp"

namespace memelem {

int ElementDescriptor::transforms_to_verdict_plane() const { return -std::max(alpha, beta); }

ElementClass ElementDescriptor::element_class() const {
  if (alpha == beta) return ElementClass::MemristorType;
  if (alpha == beta - 1) return ElementClass::MemInductorType;
  if (beta == alpha - 1) return ElementClass::MemCapacitorType;
  return ElementClass::Unnamed;
}

void ElementDescriptor::validate() const {
  if (alpha > 0 || beta > 0) {
    std::ostringstream os;
    os << "descriptor (" << alpha << ", " << beta
       << "): positive exponents (differentiating elements) are not modelled";
    throw OutOfScopeError(os.str());
  }
}

namespace {

std::string voltage_side(int e) {
  switch (e) {
    case 0: return "v";
    case -1: return "phi";
    case -2: return "rho";
    default: break;
  }
  const int k = -e - 2;
  return "int" + (k > 1 ? std::to_string(k) : std::string()) + "_rho";
}

std::string current_side(int e) {
  switch (e) {
    case 0: return "i";
    case -1: return "q";
    case -2: return "sigma";
    default: break;
  }
  const int k = -e - 2;
  return "int" + (k > 1 ? std::to_string(k) : std::string()) + "_sigma";
}

}  // namespace

std::pair<std::string, std::string> plane_labels(const ElementDescriptor& d, int depth) {
  return {current_side(d.beta + depth), voltage_side(d.alpha + depth)};
}

TableEntry table_position(const ElementDescriptor& d) {
  d.validate();
  TableEntry e;
  e.element_class = d.element_class();
  e.order = d.transforms_to_verdict_plane();
  e.constitutive_plane = plane_labels(d, 0);
  e.verdict_plane = plane_labels(d, e.order);
  static const std::map<std::pair<int, int>, std::string> star{
      {{0, 0}, "resistor"},       {{-1, 0}, "inductor"},       {{0, -1}, "capacitor"},
      {{-1, -1}, "memristor"},    {{-2, -1}, "mem-inductor"},  {{-1, -2}, "mem-capacitor"},
  };
  if (auto it = star.find({d.alpha, d.beta}); it != star.end()) {
    e.name = it->second;
    e.in_six_pointed_star = true;
    return e;
  }
  switch (e.element_class) {
    case ElementClass::MemristorType: e.name = "higher-order memristor"; break;
    case ElementClass::MemInductorType: e.name = "higher-order mem-inductor"; break;
    case ElementClass::MemCapacitorType: e.name = "higher-order mem-capacitor"; break;
    case ElementClass::Unnamed: e.name = "unnamed higher-order element"; break;
  }
  return e;
}

std::vector<ParametricLocus> element_loci(const ElementDescriptor& descriptor,
                                          const ConstitutiveCurve& curve, const Excitation& exc,
                                          int depth, int intervals) {
  const auto g = grid(exc, intervals);
  std::vector<ParametricLocus> loci;
  for (int d = 0; d <= depth; ++d)
    loci.push_back(analytic_locus(curve, exc, d, g, plane_labels(descriptor, d)));
  return loci;
}

namespace {

std::vector<std::string> ideality_caveats(const IdealityReport& r) {
  std::vector<std::string> out;
  if (!r.single_valued) out.emplace_back("non-ideal: not single-valued");
  if (!r.nonlinear) out.emplace_back("non-ideal: linear");
  if (!r.continuously_differentiable) out.emplace_back("non-ideal: not continuously differentiable");
  if (!r.strictly_monotone_increasing) out.emplace_back("non-ideal: not strictly monotone increasing");
  return out;
}

bool on_abscissa_axis(const SpecialPoint& p, double tol) { return std::abs(p.w) <= tol; }
bool on_ordinate_axis(const SpecialPoint& p, double tol) { return std::abs(p.u) <= tol; }

}  // namespace

ClassificationReport classify(const ElementDescriptor& descriptor, const ConstitutiveCurve& curve,
                              const Excitation& exc, const ToleranceSet& tol, int intervals) {
  tol.validate();
  exc.validate();
  const int depth = table_position(descriptor).order;
  if (depth > curve.max_derivative_order()) {
    std::ostringstream os;
    os << "classify: verdict plane needs " << depth << " transformations but the curve supports "
       << curve.max_derivative_order();
    throw CapabilityError(os.str());
  }
  return classify_loci(descriptor, curve, element_loci(descriptor, curve, exc, depth, intervals), exc,
                       tol);
}

ClassificationReport classify_loci(const ElementDescriptor& descriptor,
                                   const ConstitutiveCurve& curve,
                                   const std::vector<ParametricLocus>& loci, const Excitation& exc,
                                   const ToleranceSet& tol) {
  tol.validate();
  ClassificationReport rep;
  rep.descriptor = descriptor;
  rep.entry = table_position(descriptor);
  const int depth = rep.entry.order;
  if (loci.size() != static_cast<std::size_t>(depth) + 1)
    throw DomainError("classify: expected loci for depths 0.." + std::to_string(depth));

  rep.ideality = check_ideality(curve, tol);
  rep.caveats = ideality_caveats(rep.ideality);
  if (curve.range().contains(0.0)) {
    for (Branch b : {Branch::Outgoing, Branch::Returning}) {
      if (std::abs(curve.eval(0.0, b)) > tol.pinch_tol) {
        rep.caveats.emplace_back("constitutive curve does not cross the origin");
        break;
      }
    }
  }

  for (const auto& locus : loci) {
    if (locus.provenance() == Provenance::Numeric)
      rep.caveats.push_back("plane " + std::to_string(locus.depth()) +
                            " is a numeric transform; numeric tolerances apply");
    const ToleranceSet t = locus.provenance() == Provenance::Analytic ? tol : ToleranceSet::numeric();
    PlaneFingerprint fp;
    fp.depth = locus.depth();
    fp.axis_labels = locus.axis_labels();
    fp.provenance = locus.provenance();
    const auto oc = origin_crossing(locus, t.pinch_tol);
    fp.pinched = oc.crosses_origin;
    fp.abscissa_zeros = oc.abscissa_zeros;
    fp.valuedness = valuedness(locus, t.valuedness_tol).valuedness;
    const auto sym = odd_symmetry(locus, t.valuedness_tol);
    fp.odd_symmetric = sym.odd_symmetric;
    fp.symmetry_violation = sym.max_violation;
    fp.negative_slope_arcs = negative_slope_arcs(locus, t.root_tol);
    fp.special_points = oc.pinches;
    for (auto&& p : zero_tangent_points(locus, t.root_tol)) fp.special_points.push_back(p);
    for (auto&& p : vertical_tangent_points(locus, t.root_tol)) fp.special_points.push_back(p);
    std::sort(fp.special_points.begin(), fp.special_points.end(),
              [](const auto& a, const auto& b) { return a.t < b.t; });
    rep.planes.push_back(std::move(fp));
  }

  const auto& verdict_plane = rep.planes.back();
  const ToleranceSet vt =
      loci.back().provenance() == Provenance::Analytic ? tol : ToleranceSet::numeric();

  // Route 1: verdict-plane ordinate at the zeros of the abscissa.
  std::vector<Witness> abscissa_route;
  for (const auto& z : verdict_plane.abscissa_zeros) {
    if (depth >= 2) rep.max_candidate_witness = std::max(rep.max_candidate_witness, std::abs(z.w));
    if (std::abs(z.w) > vt.witness_tol) {
      const double u = state_at(loci.back(), z.t).u;
      abscissa_route.push_back({{z.t, u, z.w, SpecialPoint::Kind::ActivityWitness, chord_angle(u, z.w)},
                                WitnessRoute::AbscissaZero});
    }
  }

  // Routes 2 and 3: tangent points of the previous plane, projected.
  std::vector<Witness> zero_route, vertical_route;
  if (depth >= 1) {
    const auto& source = rep.planes[static_cast<std::size_t>(depth - 1)];
    const auto& source_locus = loci[static_cast<std::size_t>(depth - 1)];
    for (const auto& sp : source.special_points) {
      if (sp.kind == SpecialPoint::Kind::Pinch) continue;
      const auto st = state_at(source_locus, sp.t);
      const double mag = std::max(std::abs(st.du), std::abs(st.dw));
      rep.max_candidate_witness = std::max(rep.max_candidate_witness, mag);
      if (mag <= vt.witness_tol) continue;
      Witness w{{sp.t, st.du, st.dw, SpecialPoint::Kind::ActivityWitness, chord_angle(st.du, st.dw)},
                sp.kind == SpecialPoint::Kind::ZeroTangent ? WitnessRoute::ZeroTangentProjection
                                                           : WitnessRoute::VerticalTangentProjection};
      (sp.kind == SpecialPoint::Kind::ZeroTangent ? zero_route : vertical_route).push_back(w);
    }
  }

  // The abscissa-zero route and the vertical-tangent route locate the same
  // points by different root searches; on ideal curves they must agree.
  if (depth >= 1 && rep.ideality.ideal) {
    const double t_tol =
        (loci.back().provenance() == Provenance::Analytic ? 1e-6 : 1e-3) * exc.period();
    auto matched = [&](const Witness& a, const std::vector<Witness>& pool) {
      return std::any_of(pool.begin(), pool.end(), [&](const Witness& b) {
        return std::abs(a.point.t - b.point.t) <= t_tol &&
               std::abs(a.point.w - b.point.w) <= vt.witness_tol * std::max(1.0, std::abs(a.point.w));
      });
    };
    for (const auto& a : abscissa_route) {
      const bool interior = a.point.t > t_tol && a.point.t < exc.period() - t_tol;
      if (interior && !matched(a, vertical_route))
        throw ConsistencyError("classify: abscissa-zero witness at t = " + std::to_string(a.point.t) +
                               " has no vertical-tangent counterpart");
    }
    for (const auto& b : vertical_route)
      if (!matched(b, abscissa_route))
        throw ConsistencyError("classify: vertical-tangent witness at t = " +
                               std::to_string(b.point.t) + " has no abscissa-zero counterpart");
  }

  auto append = [&](const std::vector<Witness>& v) {
    rep.witnesses.insert(rep.witnesses.end(), v.begin(), v.end());
  };
  switch (rep.entry.element_class) {
    case ElementClass::MemristorType:
      append(abscissa_route);
      append(zero_route);
      break;
    case ElementClass::MemInductorType:
      append(zero_route);
      if (rep.witnesses.empty()) append(vertical_route);
      if (rep.witnesses.empty()) append(abscissa_route);
      break;
    case ElementClass::MemCapacitorType:
      append(vertical_route);
      if (rep.witnesses.empty()) append(abscissa_route);
      if (rep.witnesses.empty()) append(zero_route);
      break;
    case ElementClass::Unnamed:
      append(abscissa_route);
      append(zero_route);
      break;
  }

  if (!rep.witnesses.empty()) {
    rep.verdict = Verdict::LocallyActive;
  } else if (depth <= 1 || !rep.ideality.nonlinear) {
    bool all_zero = !verdict_plane.abscissa_zeros.empty();
    for (const auto& z : verdict_plane.abscissa_zeros)
      all_zero = all_zero && std::abs(z.w) <= vt.pinch_tol;
    rep.verdict = verdict_plane.pinched && all_zero ? Verdict::LocallyPassive : Verdict::Inconclusive;
  } else {
    rep.verdict = Verdict::Inconclusive;
    rep.caveats.emplace_back("every activity witness candidate is below witness_tol");
  }

  if (rep.verdict == Verdict::LocallyActive) {
    const bool abscissa_axis = std::all_of(rep.witnesses.begin(), rep.witnesses.end(), [&](const auto& w) {
      return on_abscissa_axis(w.point, vt.pinch_tol);
    });
    const bool ordinate_axis = std::all_of(rep.witnesses.begin(), rep.witnesses.end(), [&](const auto& w) {
      return on_ordinate_axis(w.point, vt.pinch_tol);
    });
    if (abscissa_axis && !ordinate_axis)
      rep.internal_source = InternalSource::CurrentSource;
    else if (ordinate_axis && !abscissa_axis)
      rep.internal_source = InternalSource::VoltageSource;

    if (rep.entry.order >= 2) {
      switch (rep.entry.element_class) {
        case ElementClass::MemristorType: rep.degeneration = Degeneration::NegativeNonlinearResistor; break;
        case ElementClass::MemInductorType: rep.degeneration = Degeneration::NegativeNonlinearInductor; break;
        case ElementClass::MemCapacitorType: rep.degeneration = Degeneration::NegativeNonlinearCapacitor; break;
        case ElementClass::Unnamed: break;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

std::vector<SpecialPoint> witness_points(const ClassificationReport& r) {
  std::vector<SpecialPoint> out;
  for (const auto& w : r.witnesses) out.push_back(w.point);
  return out;
}

TheoremCheck check_first_order(const CurveCase& c, const IdealityReport& id, const ToleranceSet& tol,
                               const Excitation& exc, int intervals) {
  TheoremCheck chk{"I", c.id, Outcome::Skipped, "", {}};
  if (!id.ideal) {
    chk.detail = join(ideality_caveats(id));
    return chk;
  }
  const auto rep = classify({-1, -1}, c.curve, exc, tol, intervals);
  const auto& pinches = rep.planes.back().special_points;
  std::vector<double> pinch_t;
  for (const auto& p : pinches)
    if (p.kind == SpecialPoint::Kind::Pinch) pinch_t.push_back(p.t);
  // Zeros of the first derivative of the drive over one period.
  const double half = 0.5 * exc.period();
  const std::vector<double> expected{0.0, half, 2.0 * half};
  const double t_tol = tol.root_tol * std::max(1.0, exc.period());
  auto covered = [&](const std::vector<double>& a, const std::vector<double>& b) {
    return std::all_of(a.begin(), a.end(), [&](double x) {
      return std::any_of(b.begin(), b.end(), [&](double y) { return std::abs(x - y) <= t_tol; });
    });
  };
  const bool pinch_ok = covered(expected, pinch_t) && covered(pinch_t, expected);
  if (rep.verdict == Verdict::LocallyPassive && pinch_ok) {
    chk.outcome = Outcome::Pass;
    chk.detail = "locally passive, pinched at every zero of the drive derivative";
    chk.evidence = pinches;
  } else {
    chk.outcome = Outcome::Fail;
    chk.detail = "verdict " + to_string(rep.verdict) + (pinch_ok ? "" : ", pinch set mismatch");
    chk.evidence = rep.verdict == Verdict::LocallyActive ? witness_points(rep) : pinches;
  }
  return chk;
}

TheoremCheck check_single_value(const CurveCase& c, const IdealityReport& id, const ToleranceSet& tol,
                                const Excitation& exc, int intervals) {
  TheoremCheck chk{"II", c.id, Outcome::Skipped, "", {}};
  if (!id.single_valued || !id.continuously_differentiable) {
    chk.detail = join(ideality_caveats(id));
    return chk;
  }
  if (c.curve.max_derivative_order() < 2) {
    chk.detail = "curve supports fewer than two derivatives";
    return chk;
  }
  const auto locus = analytic_locus(c.curve, exc, 2, grid(exc, intervals));
  const auto v = valuedness(locus, tol.valuedness_tol);
  std::ostringstream os;
  os << "max |w(t) - w(T - t)| = " << v.max_difference;
  chk.detail = os.str();
  chk.outcome = v.valuedness == Valuedness::Single ? Outcome::Pass : Outcome::Fail;
  for (const auto& p : v.witnesses) {
    chk.evidence.push_back({p.t1, p.u1, p.w1, SpecialPoint::Kind::ActivityWitness, chord_angle(p.u1, p.w1)});
    chk.evidence.push_back({p.t2, p.u2, p.w2, SpecialPoint::Kind::ActivityWitness, chord_angle(p.u2, p.w2)});
  }
  return chk;
}

TheoremCheck check_activity(const std::string& theorem, const ElementDescriptor& d,
                            InternalSource expected_source, const CurveCase& c,
                            const IdealityReport& id, const ToleranceSet& tol, const Excitation& exc,
                            int intervals) {
  TheoremCheck chk{theorem, c.id, Outcome::Skipped, "", {}};
  if (!id.ideal) {
    chk.detail = join(ideality_caveats(id));
    return chk;
  }
  if (c.curve.max_derivative_order() < d.transforms_to_verdict_plane()) {
    chk.detail = "curve supports too few derivatives";
    return chk;
  }
  const auto rep = classify(d, c.curve, exc, tol, intervals);
  chk.evidence = witness_points(rep);
  const bool source_ok =
      expected_source == InternalSource::None || rep.internal_source == expected_source;
  if (rep.verdict == Verdict::LocallyActive && source_ok) {
    chk.outcome = Outcome::Pass;
    chk.detail = "locally active";
    if (expected_source != InternalSource::None) chk.detail += ", " + to_string(rep.internal_source);
  } else if (rep.verdict == Verdict::Inconclusive) {
    chk.outcome = Outcome::Inconclusive;
    std::ostringstream os;
    os << "largest witness candidate " << rep.max_candidate_witness
       << " below witness_tol (vanishing second derivative at the mid-range point)";
    chk.detail = os.str();
  } else {
    chk.outcome = Outcome::Fail;
    chk.detail = "verdict " + to_string(rep.verdict) + ", source " + to_string(rep.internal_source);
  }
  return chk;
}

}  // namespace

SuiteReport theorem_suite(const std::vector<CurveCase>& cases, const ToleranceSet& tol,
                          const Excitation& exc, int intervals) {
  SuiteReport rep;
  for (const auto& c : cases) {
    const auto id = check_ideality(c.curve, tol);
    rep.checks.push_back(check_first_order(c, id, tol, exc, intervals));
    rep.checks.push_back(check_single_value(c, id, tol, exc, intervals));
    rep.checks.push_back(check_activity("III", {-2, -2}, InternalSource::None, c, id, tol, exc, intervals));
    rep.checks.push_back(
        check_activity("IV", {-3, -2}, InternalSource::CurrentSource, c, id, tol, exc, intervals));
    rep.checks.push_back(
        check_activity("V", {-2, -3}, InternalSource::VoltageSource, c, id, tol, exc, intervals));
  }
  std::stable_sort(rep.checks.begin(), rep.checks.end(), [](const auto& a, const auto& b) {
    return a.instance_id < b.instance_id;
  });
  for (const char* th : {"I", "II", "III", "IV", "V"}) rep.summary[th] = {};
  for (const auto& chk : rep.checks) {
    auto& s = rep.summary[chk.theorem];
    switch (chk.outcome) {
      case Outcome::Pass: ++s.passed; break;
      case Outcome::Fail: ++s.failed; break;
      case Outcome::Skipped: ++s.skipped; break;
      case Outcome::Inconclusive: ++s.inconclusive; break;
    }
  }
  rep.all_passed = true;
  for (auto& [name, s] : rep.summary) {
    s.holds = s.failed == 0 && s.passed > 0;
    rep.all_passed = rep.all_passed && s.holds;
  }
  return rep;
}

std::string to_string(ElementClass c) {
  switch (c) {
    case ElementClass::MemristorType: return "memristor_type";
    case ElementClass::MemInductorType: return "mem_inductor_type";
    case ElementClass::MemCapacitorType: return "mem_capacitor_type";
    case ElementClass::Unnamed: return "unnamed";
  }
  return "unnamed";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::LocallyPassive: return "LocallyPassive";
    case Verdict::LocallyActive: return "LocallyActive";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string to_string(Degeneration d) {
  switch (d) {
    case Degeneration::None: return "None";
    case Degeneration::NegativeNonlinearResistor: return "NegativeNonlinearResistor";
    case Degeneration::NegativeNonlinearInductor: return "NegativeNonlinearInductor";
    case Degeneration::NegativeNonlinearCapacitor: return "NegativeNonlinearCapacitor";
  }
  return "None";
}

std::string to_string(InternalSource s) {
  switch (s) {
    case InternalSource::None: return "None";
    case InternalSource::CurrentSource: return "CurrentSource";
    case InternalSource::VoltageSource: return "VoltageSource";
  }
  return "None";
}

std::string to_string(WitnessRoute r) {
  switch (r) {
    case WitnessRoute::AbscissaZero: return "abscissa_zero";
    case WitnessRoute::ZeroTangentProjection: return "zero_tangent_projection";
    case WitnessRoute::VerticalTangentProjection: return "vertical_tangent_projection";
  }
  return "abscissa_zero";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "skipped";
}

}  // namespace memelem

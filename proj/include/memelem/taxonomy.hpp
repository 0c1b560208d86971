/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "memelem/constitutive.hpp"
#include "memelem/excitation.hpp"
#include "memelem/loci.hpp"
#include "memelem/locus.hpp"
#include "memelem/tolerances.hpp"

namespace memelem {

/// Grouping of table positions by the offset between the two exponents.
enum class ElementClass { MemristorType, MemInductorType, MemCapacitorType, Unnamed };

/// Position in the table of two-terminal elements. alpha counts time
/// integrals of voltage, beta of current (alpha = -2 means rho).
struct ElementDescriptor {
  int alpha = -1;
  int beta = -1;

  /// Number of conformal differential transformations that bring the
  /// constitutive plane to the plane (alpha + k, beta + k) with max = 0.
  int transforms_to_verdict_plane() const;
  ElementClass element_class() const;
  /// Throws OutOfScopeError for positive exponents.
  void validate() const;

  friend bool operator==(const ElementDescriptor&, const ElementDescriptor&) = default;
};

/// Axis labels (abscissa = current side, ordinate = voltage side) of the
/// plane reached after `depth` transformations.
std::pair<std::string, std::string> plane_labels(const ElementDescriptor& d, int depth);

struct TableEntry {
  std::string name;
  ElementClass element_class = ElementClass::Unnamed;
  int order = 0;
  bool in_six_pointed_star = false;
  std::pair<std::string, std::string> constitutive_plane;
  std::pair<std::string, std::string> verdict_plane;
};

TableEntry table_position(const ElementDescriptor& d);

enum class Verdict { LocallyPassive, LocallyActive, Inconclusive };
enum class Degeneration {
  None,
  NegativeNonlinearResistor,
  NegativeNonlinearInductor,
  NegativeNonlinearCapacitor
};
enum class InternalSource { None, CurrentSource, VoltageSource };

/// How an activity witness was obtained.
enum class WitnessRoute {
  /// Verdict-plane ordinate where the abscissa vanishes.
  AbscissaZero,
  /// Zero-tangent point of the previous plane projected onto the abscissa axis.
  ZeroTangentProjection,
  /// Vertical-tangent point of the previous plane projected onto the ordinate axis.
  VerticalTangentProjection,
};

struct Witness {
  SpecialPoint point;
  WitnessRoute route = WitnessRoute::AbscissaZero;
};

struct PlaneFingerprint {
  int depth = 0;
  std::pair<std::string, std::string> axis_labels;
  Provenance provenance = Provenance::Analytic;
  bool pinched = false;
  Valuedness valuedness = Valuedness::Single;
  bool odd_symmetric = false;
  double symmetry_violation = 0.0;
  std::vector<ArcInterval> negative_slope_arcs;
  std::vector<AbscissaZero> abscissa_zeros;
  /// Pinches, zero-tangent and vertical-tangent points.
  std::vector<SpecialPoint> special_points;
};

struct ClassificationReport {
  ElementDescriptor descriptor;
  TableEntry entry;
  IdealityReport ideality;
  std::vector<PlaneFingerprint> planes;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Witness> witnesses;
  /// Largest magnitude among all witness candidates, accepted or not.
  double max_candidate_witness = 0.0;
  Degeneration degeneration = Degeneration::None;
  InternalSource internal_source = InternalSource::None;
  std::vector<std::string> caveats;
};

/// Full pipeline: ideality, loci up to the verdict plane, per-plane
/// fingerprints and the passivity/activity verdict with witnesses.
ClassificationReport classify(const ElementDescriptor& descriptor, const ConstitutiveCurve& curve,
                              const Excitation& exc = {}, const ToleranceSet& tol = {},
                              int intervals = SampleGrid::kDefaultIntervals);

/// Same pipeline on precomputed loci for depths 0..order, e.g. a numeric
/// chain. Numeric-provenance planes use ToleranceSet::numeric().
ClassificationReport classify_loci(const ElementDescriptor& descriptor,
                                   const ConstitutiveCurve& curve,
                                   const std::vector<ParametricLocus>& loci, const Excitation& exc,
                                   const ToleranceSet& tol = {});

/// Analysed loci for every plane from the constitutive one to `depth`.
std::vector<ParametricLocus> element_loci(const ElementDescriptor& descriptor,
                                          const ConstitutiveCurve& curve, const Excitation& exc,
                                          int depth, int intervals = SampleGrid::kDefaultIntervals);

// --- theorem suite ---------------------------------------------------------

struct CurveCase {
  std::string id;
  ConstitutiveCurve curve;
};

enum class Outcome { Pass, Fail, Skipped, Inconclusive };

struct TheoremCheck {
  std::string theorem;  // "I" .. "V"
  std::string instance_id;
  Outcome outcome = Outcome::Skipped;
  std::string detail;
  /// Verdict-plane witnesses or offending points backing the outcome.
  std::vector<SpecialPoint> evidence;
};

struct TheoremSummary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int inconclusive = 0;
  /// No failures and at least one passing instance.
  bool holds = false;
};

struct SuiteReport {
  std::vector<TheoremCheck> checks;
  std::map<std::string, TheoremSummary> summary;
  bool all_passed = false;
};

SuiteReport theorem_suite(const std::vector<CurveCase>& cases, const ToleranceSet& tol = {},
                          const Excitation& exc = {},
                          int intervals = SampleGrid::kDefaultIntervals);

std::string to_string(ElementClass c);
std::string to_string(Verdict v);
std::string to_string(Degeneration d);
std::string to_string(InternalSource s);
std::string to_string(WitnessRoute r);
std::string to_string(Outcome o);

}  // namespace memelem

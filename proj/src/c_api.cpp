/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "memelem/memelem.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "memelem/app.hpp"
#include "memelem/errors.hpp"
#include "memelem/formats.hpp"

struct memelem_curve {
  memelem::ConstitutiveCurve curve;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_field;

void set_error(std::string msg, std::string field = {}) {
  g_error = std::move(msg);
  g_field = std::move(field);
}

template <typename F>
memelem_status guarded(F&& f) {
  try {
    g_error.clear();
    g_field.clear();
    f();
    return MEMELEM_OK;
  } catch (const memelem::ConfigError& e) {
    set_error(e.what(), e.field());
    return MEMELEM_ERR_CONFIG;
  } catch (const memelem::DomainError& e) {
    set_error(e.what());
    return MEMELEM_ERR_DOMAIN;
  } catch (const memelem::CapabilityError& e) {
    set_error(e.what());
    return MEMELEM_ERR_CAPABILITY;
  } catch (const memelem::NumericalError& e) {
    set_error(e.what());
    return MEMELEM_ERR_NUMERICAL;
  } catch (const memelem::ConsistencyError& e) {
    set_error(e.what());
    return MEMELEM_ERR_CONSISTENCY;
  } catch (const memelem::OutOfScopeError& e) {
    set_error(e.what());
    return MEMELEM_ERR_OUT_OF_SCOPE;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return MEMELEM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return MEMELEM_ERR_INTERNAL;
  }
}

memelem_status invalid(const char* what) {
  set_error(what);
  return MEMELEM_ERR_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* memelem_last_error(void) { return g_error.c_str(); }
const char* memelem_last_error_field(void) { return g_field.c_str(); }

const char* memelem_status_name(memelem_status status) {
  switch (status) {
    case MEMELEM_OK: return "ok";
    case MEMELEM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MEMELEM_ERR_CONFIG: return "config error";
    case MEMELEM_ERR_DOMAIN: return "domain error";
    case MEMELEM_ERR_CAPABILITY: return "capability error";
    case MEMELEM_ERR_NUMERICAL: return "numerical error";
    case MEMELEM_ERR_CONSISTENCY: return "consistency error";
    case MEMELEM_ERR_OUT_OF_SCOPE: return "out of scope";
    case MEMELEM_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* memelem_version(void) { return "0.1.0"; }

void memelem_string_free(char* s) { std::free(s); }

memelem_status memelem_curve_from_json(const char* json, memelem_curve** out) {
  if (!json || !out) return invalid("memelem_curve_from_json: null argument");
  *out = nullptr;
  return guarded([&] { *out = new memelem_curve{memelem::parse_curve(json)}; });
}

void memelem_curve_free(memelem_curve* curve) { delete curve; }

memelem_status memelem_curve_eval(const memelem_curve* curve, double x, double* out) {
  if (!curve || !out) return invalid("memelem_curve_eval: null argument");
  return guarded([&] { *out = curve->curve.eval(x); });
}

memelem_status memelem_curve_derivative(const memelem_curve* curve, double x, int k, double* out) {
  if (!curve || !out) return invalid("memelem_curve_derivative: null argument");
  return guarded([&] { *out = curve->curve.derivative(x, k); });
}

memelem_status memelem_mvt_point(const memelem_curve* curve, double a, double b, double* out) {
  if (!curve || !out) return invalid("memelem_mvt_point: null argument");
  return guarded([&] { *out = memelem::mvt_point(curve->curve, a, b); });
}

memelem_status memelem_excite(double amplitude, double omega, double offset, double t, int level,
                              double* out) {
  if (!out) return invalid("memelem_excite: null argument");
  return guarded([&] { *out = memelem::excite({amplitude, omega, offset}, t, level); });
}

memelem_status memelem_classify(const memelem_curve* curve, int alpha, int beta, char** report_json) {
  if (!curve || !report_json) return invalid("memelem_classify: null argument");
  *report_json = nullptr;
  return guarded([&] {
    *report_json = dup(memelem::report_to_json(memelem::classify({alpha, beta}, curve->curve)));
  });
}

memelem_status memelem_analyze(const char* config_path, const char* out_dir, char** report_json) {
  if (!config_path) return invalid("memelem_analyze: null config path");
  if (report_json) *report_json = nullptr;
  return guarded([&] {
    auto cfg = memelem::parse_run_config(memelem::read_text_file(config_path, "config"));
    if (out_dir) cfg.output_dir = out_dir;
    const auto run = memelem::run_analysis(cfg);
    if (report_json) *report_json = dup(memelem::report_to_json(run.report));
  });
}

memelem_status memelem_figure(const char* id, const char* out_dir) {
  if (!id || !out_dir) return invalid("memelem_figure: null argument");
  return guarded([&] { memelem::write_figure(id, out_dir); });
}

memelem_status memelem_suite(const char* families_path, const char* out_dir, int* all_passed,
                             char** suite_json) {
  if (!families_path || !out_dir) return invalid("memelem_suite: null argument");
  if (suite_json) *suite_json = nullptr;
  return guarded([&] {
    const auto cases = memelem::parse_families(memelem::read_text_file(families_path, "families"));
    const auto run = memelem::run_suite(cases, out_dir);
    if (all_passed) *all_passed = run.report.all_passed ? 1 : 0;
    if (suite_json) *suite_json = dup(memelem::suite_to_json(run.report));
  });
}

memelem_status memelem_sweep(const char* config_path, const char* out_dir, int* rows) {
  if (!config_path) return invalid("memelem_sweep: null config path");
  return guarded([&] {
    auto cfg = memelem::parse_sweep_config(memelem::read_text_file(config_path, "config"));
    if (out_dir) cfg.base.output_dir = out_dir;
    const auto run = memelem::run_sweep(cfg);
    if (rows) *rows = static_cast<int>(run.rows.size());
  });
}

}  // extern "C"

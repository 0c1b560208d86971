/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "memelem/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "memelem/errors.hpp"

namespace memelem {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const std::string& field) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(field, std::string("malformed JSON (") + e.what() + ")");
  }
}

std::string join_field(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void require_object(const json& j, const std::string& field) {
  if (!j.is_object()) throw ConfigError(field, "expected an object");
}

void reject_unknown(const json& j, const std::string& field, std::initializer_list<const char*> known) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError(join_field(field, key), "unknown key");
  }
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ConfigError(field, "expected an integer");
  return j.get<int>();
}

std::vector<double> numbers(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(number(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::string string(const json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError(field, "expected a string");
  return j.get<std::string>();
}

// Library errors raised while building an object become ConfigErrors on `field`.
template <typename F>
auto as_config(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(field, e.what());
  }
}

ConstitutiveCurve curve_from(const json& j, const std::string& field) {
  require_object(j, field);
  reject_unknown(j, field, {"family", "params", "range", "max_derivative_order", "outgoing", "returning"});
  if (!j.contains("family")) throw ConfigError(join_field(field, "family"), "missing");
  const std::string family = string(j["family"], join_field(field, "family"));

  if (family == "two_branch") {
    for (const char* k : {"params", "range", "max_derivative_order"})
      if (j.contains(k)) throw ConfigError(join_field(field, k), "not used by two_branch; set it on the branches");
    for (const char* k : {"outgoing", "returning"})
      if (!j.contains(k)) throw ConfigError(join_field(field, k), "missing");
    auto out = curve_from(j["outgoing"], join_field(field, "outgoing"));
    auto ret = curve_from(j["returning"], join_field(field, "returning"));
    return as_config(field, [&] { return ConstitutiveCurve::two_branch(std::move(out), std::move(ret)); });
  }
  for (const char* k : {"outgoing", "returning"})
    if (j.contains(k)) throw ConfigError(join_field(field, k), "only used by two_branch");

  OperatingRange range;
  if (j.contains("range")) {
    const auto f = join_field(field, "range");
    const auto r = numbers(j["range"], f);
    if (r.size() != 2) throw ConfigError(f, "expected [min, max]");
    if (!(r[0] < r[1])) throw ConfigError(f, "min must be below max");
    range = {r[0], r[1]};
  }
  int max_order = ConstitutiveCurve::kDefaultMaxOrder;
  if (j.contains("max_derivative_order")) {
    const auto f = join_field(field, "max_derivative_order");
    max_order = integer(j["max_derivative_order"], f);
    if (max_order < 0) throw ConfigError(f, "must be non-negative");
  }
  std::vector<double> params;
  const auto pf = join_field(field, "params");
  if (j.contains("params")) params = numbers(j["params"], pf);

  if (family == "polynomial") {
    if (params.empty()) throw ConfigError(pf, "polynomial needs at least one coefficient");
    return as_config(pf, [&] { return ConstitutiveCurve::polynomial(params, range, max_order); });
  }
  if (family == "tanh_scaled") {
    if (params.size() != 2) throw ConfigError(pf, "tanh_scaled expects [a, b]");
    return as_config(pf, [&] { return ConstitutiveCurve::tanh_scaled(params[0], params[1], range, max_order); });
  }
  if (family == "logistic") {
    if (!params.empty()) throw ConfigError(pf, "logistic takes no params");
    return as_config(field, [&] { return ConstitutiveCurve::logistic(range, max_order); });
  }
  if (family == "piecewise_linear") {
    if (j.contains("range")) throw ConfigError(join_field(field, "range"), "piecewise_linear range is the knot span");
    if (params.size() < 4 || params.size() % 2 != 0)
      throw ConfigError(pf, "piecewise_linear expects [x0, y0, x1, y1, ...] with at least two knots");
    std::vector<std::pair<double, double>> knots;
    for (std::size_t i = 0; i < params.size(); i += 2) knots.emplace_back(params[i], params[i + 1]);
    return as_config(pf, [&] { return ConstitutiveCurve::piecewise_linear(knots, max_order); });
  }
  throw ConfigError(join_field(field, "family"), "unknown family '" + family + "'");
}

RunConfig run_from(const json& j) {
  require_object(j, "config");
  reject_unknown(j, "", {"name", "curve", "descriptor", "excitation", "grid_n", "tolerances",
                         "output_dir", "formats", "sweep"});
  RunConfig c;
  if (j.contains("name")) {
    c.name = string(j["name"], "name");
    if (c.name.empty() || c.name.find_first_of("/\\") != std::string::npos)
      throw ConfigError("name", "must be a non-empty file-name stem");
  }
  if (!j.contains("curve")) throw ConfigError("curve", "missing");
  c.curve = curve_from(j["curve"], "curve");

  if (!j.contains("descriptor")) throw ConfigError("descriptor", "missing");
  const auto& d = j["descriptor"];
  require_object(d, "descriptor");
  reject_unknown(d, "descriptor", {"alpha", "beta"});
  for (const char* k : {"alpha", "beta"})
    if (!d.contains(k)) throw ConfigError(join_field("descriptor", k), "missing");
  c.descriptor.alpha = integer(d["alpha"], "descriptor.alpha");
  c.descriptor.beta = integer(d["beta"], "descriptor.beta");
  if (c.descriptor.alpha > 0) throw ConfigError("descriptor.alpha", "must be <= 0");
  if (c.descriptor.beta > 0) throw ConfigError("descriptor.beta", "must be <= 0");
  if (c.descriptor.transforms_to_verdict_plane() > c.curve.max_derivative_order())
    throw ConfigError("curve.max_derivative_order",
                      "below the " + std::to_string(c.descriptor.transforms_to_verdict_plane()) +
                          " transformations the descriptor needs");

  if (j.contains("excitation")) {
    const auto& e = j["excitation"];
    require_object(e, "excitation");
    reject_unknown(e, "excitation", {"amplitude", "omega", "offset"});
    if (e.contains("amplitude")) c.excitation.amplitude = number(e["amplitude"], "excitation.amplitude");
    if (e.contains("omega")) c.excitation.omega = number(e["omega"], "excitation.omega");
    if (e.contains("offset")) c.excitation.offset = number(e["offset"], "excitation.offset");
    c.excitation.validate();
  }
  if (j.contains("grid_n")) {
    c.grid_n = integer(j["grid_n"], "grid_n");
    if (c.grid_n < 64) throw ConfigError("grid_n", "must be at least 64");
  }
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    require_object(t, "tolerances");
    reject_unknown(t, "tolerances",
                   {"pinch_tol", "valuedness_tol", "root_tol", "slope_tol", "nonlin_tol", "phase_tol",
                    "witness_tol", "slope_jump_tol"});
    auto set = [&](const char* key, double& dst) {
      if (t.contains(key)) dst = number(t[key], join_field("tolerances", key));
    };
    set("pinch_tol", c.tolerances.pinch_tol);
    set("valuedness_tol", c.tolerances.valuedness_tol);
    set("root_tol", c.tolerances.root_tol);
    set("slope_tol", c.tolerances.slope_tol);
    set("nonlin_tol", c.tolerances.nonlin_tol);
    set("phase_tol", c.tolerances.phase_tol);
    set("witness_tol", c.tolerances.witness_tol);
    set("slope_jump_tol", c.tolerances.slope_jump_tol);
    c.tolerances.validate();
  }
  if (j.contains("output_dir")) {
    c.output_dir = string(j["output_dir"], "output_dir");
    if (c.output_dir.empty()) throw ConfigError("output_dir", "must not be empty");
  }
  if (j.contains("formats")) {
    if (!j["formats"].is_array()) throw ConfigError("formats", "expected an array");
    c.formats.clear();
    for (std::size_t i = 0; i < j["formats"].size(); ++i) {
      const auto f = "formats[" + std::to_string(i) + "]";
      const auto v = string(j["formats"][i], f);
      if (v != "csv" && v != "svg" && v != "json") throw ConfigError(f, "expected csv, svg or json");
      c.formats.insert(v);
    }
  }
  return c;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  const auto j = parse_json(json_text, "config");
  if (j.is_object() && j.contains("sweep")) throw ConfigError("sweep", "only valid for the sweep command");
  return run_from(j);
}

SweepConfig parse_sweep_config(const std::string& json_text) {
  const auto j = parse_json(json_text, "config");
  SweepConfig s;
  s.base = run_from(j);
  if (!j.contains("sweep")) throw ConfigError("sweep", "missing");
  const auto& axes = j["sweep"];
  if (!axes.is_array() || axes.empty()) throw ConfigError("sweep", "expected a non-empty array of axes");
  const auto n_params = s.base.curve.parameters().size();
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const auto f = "sweep[" + std::to_string(i) + "]";
    require_object(axes[i], f);
    reject_unknown(axes[i], f, {"param", "values"});
    if (!axes[i].contains("param")) throw ConfigError(f + ".param", "missing");
    if (!axes[i].contains("values")) throw ConfigError(f + ".values", "missing");
    const int p = integer(axes[i]["param"], f + ".param");
    if (p < 0 || static_cast<std::size_t>(p) >= n_params)
      throw ConfigError(f + ".param", "index outside curve.params");
    SweepAxis a{static_cast<std::size_t>(p), numbers(axes[i]["values"], f + ".values")};
    if (a.values.empty()) throw ConfigError(f + ".values", "must not be empty");
    s.axes.push_back(std::move(a));
  }
  return s;
}

ConstitutiveCurve parse_curve(const std::string& json_text, const std::string& field) {
  return curve_from(parse_json(json_text, field), field);
}

std::vector<CurveCase> parse_families(const std::string& json_text) {
  const auto j = parse_json(json_text, "families");
  require_object(j, "families");
  reject_unknown(j, "", {"families"});
  if (!j.contains("families") || !j["families"].is_array() || j["families"].empty())
    throw ConfigError("families", "expected a non-empty array");
  std::vector<CurveCase> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j["families"].size(); ++i) {
    const auto f = "families[" + std::to_string(i) + "]";
    const auto& e = j["families"][i];
    require_object(e, f);
    reject_unknown(e, f, {"id", "curve"});
    if (!e.contains("id")) throw ConfigError(f + ".id", "missing");
    if (!e.contains("curve")) throw ConfigError(f + ".curve", "missing");
    auto id = string(e["id"], f + ".id");
    if (!seen.insert(id).second) throw ConfigError(f + ".id", "duplicate id '" + id + "'");
    out.push_back({std::move(id), curve_from(e["curve"], f + ".curve")});
  }
  return out;
}

ConstitutiveCurve with_param(const ConstitutiveCurve& base, std::size_t index, double value) {
  auto p = base.parameters();
  if (index >= p.size()) throw ConfigError("sweep.param", "index outside curve.params");
  p[index] = value;
  const std::string field = "curve.params[" + std::to_string(index) + "]";
  return as_config(field, [&] {
    switch (base.family()) {
      case ConstitutiveCurve::Family::Polynomial:
        return ConstitutiveCurve::polynomial(p, base.range(), base.max_derivative_order());
      case ConstitutiveCurve::Family::TanhScaled:
        return ConstitutiveCurve::tanh_scaled(p[0], p[1], base.range(), base.max_derivative_order());
      case ConstitutiveCurve::Family::PiecewiseLinear: {
        std::vector<std::pair<double, double>> knots;
        for (std::size_t i = 0; i + 1 < p.size(); i += 2) knots.emplace_back(p[i], p[i + 1]);
        return ConstitutiveCurve::piecewise_linear(knots, base.max_derivative_order());
      }
      default:
        throw ConfigError(field, base.family_name() + " curves have no sweepable params");
    }
  });
}

std::string read_text_file(const std::filesystem::path& path, const std::string& field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(field, "cannot read '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace memelem

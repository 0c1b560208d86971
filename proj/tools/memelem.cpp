/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
// Command-line front end over the C API.
//
//   memelem analyze --config run.json [--out DIR]
//   memelem figure <fig2|fig4|fig6|fig7|fig8|fig10> [--out DIR]
//   memelem suite --families families.json [--out DIR] [--strict]
//   memelem sweep --config sweep.json [--out DIR]
//
// Exit codes: 0 success, 1 analysis failure, 2 config or usage error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "memelem/memelem.h"

namespace {

constexpr int kOk = 0, kAnalysisFailure = 1, kUsage = 2;

int fail(memelem_status s) {
  std::string msg = memelem_last_error();
  for (char& c : msg)
    if (c == '\n' || c == '\r') c = ' ';
  std::cerr << "memelem: " << memelem_status_name(s) << ": " << msg << "\n";
  switch (s) {
    case MEMELEM_ERR_CONFIG:
    case MEMELEM_ERR_OUT_OF_SCOPE:
    case MEMELEM_ERR_INVALID_ARGUMENT: return kUsage;
    default: return kAnalysisFailure;
  }
}

struct Owned {
  char* p = nullptr;
  ~Owned() { memelem_string_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Origin-crossing analysis of higher-order memristive elements"};
  app.require_subcommand(1);
  app.set_version_flag("--version", memelem_version());

  std::string config, out, figure_id, families;
  bool strict = false;

  auto* analyze = app.add_subcommand("analyze", "classify one element and write loci, plots and a report");
  analyze->add_option("--config", config, "run configuration (JSON)")->required();
  analyze->add_option("--out", out, "output directory (overrides output_dir)");

  auto* figure = app.add_subcommand("figure", "regenerate one reference figure");
  figure->add_option("id", figure_id, "fig2, fig4, fig6, fig7, fig8 or fig10")->required();
  figure->add_option("--out", out, "output directory")->default_val("figures");

  auto* suite = app.add_subcommand("suite", "run the theorem checks over a family list");
  suite->add_option("--families", families, "family list (JSON)")->required();
  suite->add_option("--out", out, "output directory")->default_val("suite");
  suite->add_flag("--strict", strict, "exit 1 when any check fails");

  auto* sweep = app.add_subcommand("sweep", "verdict table over a grid of curve parameters");
  sweep->add_option("--config", config, "sweep configuration (JSON)")->required();
  sweep->add_option("--out", out, "output directory (overrides output_dir)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (char& c : msg)
      if (c == '\n') c = ' ';
    std::cerr << "memelem: usage error: " << msg << "\n";
    return kUsage;
  }

  const char* out_dir = out.empty() ? nullptr : out.c_str();

  if (analyze->parsed()) {
    Owned report;
    if (auto s = memelem_analyze(config.c_str(), out_dir, &report.p); s != MEMELEM_OK) return fail(s);
    const auto j = nlohmann::json::parse(report.p);
    std::cout << "verdict " << j["verdict"].get<std::string>() << ", internal_source "
              << j["internal_source"].get<std::string>() << ", degeneration "
              << j["degeneration"].get<std::string>() << "\n";
    return kOk;
  }
  if (figure->parsed()) {
    if (auto s = memelem_figure(figure_id.c_str(), out.c_str()); s != MEMELEM_OK) return fail(s);
    std::cout << figure_id << " written to " << out << "\n";
    return kOk;
  }
  if (suite->parsed()) {
    int all_passed = 0;
    Owned report;
    if (auto s = memelem_suite(families.c_str(), out.c_str(), &all_passed, &report.p); s != MEMELEM_OK)
      return fail(s);
    const auto j = nlohmann::json::parse(report.p);
    for (const auto& [name, sum] : j["summary"].items())
      std::cout << "theorem " << name << ": passed " << sum["passed"] << ", failed " << sum["failed"]
                << ", skipped " << sum["skipped"] << ", inconclusive " << sum["inconclusive"]
                << (sum["holds"].get<bool>() ? ", holds" : ", not established") << "\n";
    if (strict && !all_passed) {
      std::cerr << "memelem: suite found a counterexample\n";
      return kAnalysisFailure;
    }
    return kOk;
  }
  int rows = 0;
  if (auto s = memelem_sweep(config.c_str(), out_dir, &rows); s != MEMELEM_OK) return fail(s);
  std::cout << rows << " sweep points classified\n";
  return kOk;
}

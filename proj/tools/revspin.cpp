// Copyright 2026 The revspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "revspin/cli/commands.hpp"
#include "revspin/errors.hpp"

namespace {

using namespace revspin::cli;

constexpr int kExitUsage = 2;
constexpr int kExitCondition = 3;
constexpr int kExitNumerical = 4;

// Raw flag text; parsed with the angle and half-integer grammars after CLI11.
struct ScenarioFlags {
  std::optional<std::string> s, j, g, theta, phi, state, gamma, m, varphi, j_max, threshold;

  void attach(CLI::App* cmd) {
    cmd->add_option("--s", s, "system spin (half-integer)");
    cmd->add_option("--j", j, "probe spin (half-integer)");
    cmd->add_option("--g", g, "coupling g");
    cmd->add_option("--theta", theta, "probe polar angle (angle grammar)");
    cmd->add_option("--phi", phi, "probe azimuth (angle grammar)");
    cmd->add_option("--state", state,
                    "equal|basis:SIGMA|coherent-x|coherent-eq:PHI|cat-x:RE,IM,RE,IM|"
                    "cat-z:RE,IM,RE,IM|amps:FILE");
    cmd->add_option("--gamma", gamma, "hypothesis angle for figure 6");
    cmd->add_option("--m", m, "kept outcome for figure 8");
    cmd->add_option("--varphi", varphi, "equatorial angle of the initial state for figure 8");
    cmd->add_option("--j-max", j_max, "largest probe spin for figure 7");
    cmd->add_option("--threshold", threshold, "fidelity threshold for approximate recovery");
  }

  ScenarioOverrides overrides() const {
    ScenarioOverrides o;
    if (s) o.s = half(*s, "--s");
    if (j) o.j = half(*j, "--j");
    if (g) o.g = parse_number(*g);
    if (theta) o.theta = parse_angle(*theta);
    if (phi) o.phi = parse_angle(*phi);
    if (state) o.state = *state;
    if (gamma) o.gamma = parse_angle(*gamma);
    if (m) o.m = half(*m, "--m");
    if (varphi) o.varphi = parse_angle(*varphi);
    if (j_max) o.j_max = half(*j_max, "--j-max");
    if (threshold) o.threshold = parse_number(*threshold);
    return o;
  }

  bool any() const {
    return s || j || g || theta || phi || state || gamma || m || varphi || j_max || threshold;
  }

  static revspin::HalfInt half(const std::string& text, const char* flag) {
    try {
      return revspin::parse_half_int(text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(flag) + ": " + e.what());
    }
  }
};

void emit(const CsvTable& table, const std::optional<std::string>& out, const char* file) {
  if (!out) {
    std::cout << table.str();
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(*out, ec);
  table.write(std::filesystem::path(*out) / file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator for reversible spin measurements"};
  app.require_subcommand(1);

  auto* figure = app.add_subcommand("figure", "write figN.csv and figN.meta.txt");
  int figure_id = 0;
  std::string figure_out;
  figure->add_option("--id", figure_id, "figure id: 1, 3..11")->required();
  figure->add_option("--out", figure_out, "output directory")->required();
  ScenarioFlags figure_flags;
  figure_flags.attach(figure);

  auto* metrics = app.add_subcommand("metrics", "print scalar metrics as CSV");
  std::optional<std::string> preset;
  std::optional<std::string> metrics_out;
  metrics->add_option("--preset", preset, "named scenario");
  metrics->add_option("--out", metrics_out, "directory for metrics.csv (default stdout)");
  ScenarioFlags metrics_flags;
  metrics_flags.attach(metrics);

  auto* oracle = app.add_subcommand("oracle-check", "compare closed forms with the oracle");
  int max_2j = 8;
  int max_2s = 6;
  std::string tol_text = "1e-10";
  oracle->add_option("--max-2j", max_2j, "largest 2j");
  oracle->add_option("--max-2s", max_2s, "largest 2s");
  oracle->add_option("--tol", tol_text, "tolerance");
  std::optional<std::string> oracle_out;
  oracle->add_option("--out", oracle_out, "directory for oracle_check.csv (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "vary one parameter over a grid");
  std::string vary;
  std::string range;
  sweep->add_option("--vary", vary, "j, g, theta or phi")->required();
  sweep->add_option("--range", range, "A:B:STEP")->required();
  std::optional<std::string> sweep_out;
  sweep->add_option("--out", sweep_out, "directory for sweep.csv (default stdout)");
  ScenarioFlags sweep_flags;
  sweep_flags.attach(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (figure->parsed()) {
      Scenario sc = figure_defaults(figure_id);
      figure_flags.overrides().apply(sc);
      write_figure(figure_id, sc, figure_out);
    } else if (metrics->parsed()) {
      std::vector<MetricRow> rows;
      if (preset) {
        if (metrics_flags.any()) throw UsageError("--preset cannot be combined with scenario flags");
        rows = preset_metrics(*preset);
      } else {
        Scenario sc;
        metrics_flags.overrides().apply(sc);
        rows = scenario_metrics(sc);
      }
      emit(metrics_table(rows), metrics_out, "metrics.csv");
    } else if (oracle->parsed()) {
      const double tol = std::stod(tol_text);
      const OracleCheck check = oracle_check(max_2j, max_2s, tol);
      emit(check.table, oracle_out, "oracle_check.csv");
      if (!check.pass) {
        std::cerr << "oracle-check: deviation above tolerance " << tol_text << "\n";
        return kExitNumerical;
      }
    } else if (sweep->parsed()) {
      Scenario sc;
      sweep_flags.overrides().apply(sc);
      emit(run_sweep(sc, vary, range, sweep_threads()), sweep_out, "sweep.csv");
    }
  } catch (const revspin::ConditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCondition;
  } catch (const revspin::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // Unwritable output paths and similar I/O failures.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}

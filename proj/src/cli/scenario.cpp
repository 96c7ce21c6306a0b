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

#include "revspin/cli/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "revspin/cli/format.hpp"
#include "revspin/prep.hpp"

namespace revspin::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

SpinState cat_from(CatAxis axis, const std::string& args, HalfInt s) {
  const auto parts = split(args, ',');
  if (parts.size() != 4) {
    throw UsageError("cat state expects RE,IM,RE,IM, got '" + args + "'");
  }
  const std::complex<double> plus{parse_number(parts[0]), parse_number(parts[1])};
  const std::complex<double> minus{parse_number(parts[2]), parse_number(parts[3])};
  if (std::norm(plus) + std::norm(minus) == 0.0) {
    throw UsageError("cat state coefficients are both zero");
  }
  return cat_state(axis, s, plus, minus);
}

}  // namespace

Scenario::Scenario() : theta(kPi / 6), phi(kPi / 6), gamma(kPi / 6) {}

void ScenarioOverrides::apply(Scenario& scenario) const {
  if (s) scenario.s = *s;
  if (j) scenario.j = *j;
  if (g) scenario.g = *g;
  if (theta) scenario.theta = *theta;
  if (phi) scenario.phi = *phi;
  if (state) scenario.state = *state;
  if (gamma) scenario.gamma = *gamma;
  if (m) scenario.m = *m;
  if (varphi) scenario.varphi = *varphi;
  if (j_max) scenario.j_max = *j_max;
  if (threshold) scenario.threshold = *threshold;
}

SpinState read_amplitude_file(const std::string& path, HalfInt s) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read amplitude file '" + path + "'");
  std::stringstream buffer;
  buffer << f.rdbuf();
  const std::string text = buffer.str();
  if (text.empty() || text.back() != '\n') {
    throw UsageError("amplitude file '" + path + "' must end with a newline");
  }
  auto lines = split(text.substr(0, text.size() - 1), '\n');
  if (lines.size() != multiplicity(s)) {
    throw UsageError("amplitude file '" + path + "' has " + std::to_string(lines.size()) +
                     " lines, expected 2s+1 = " + std::to_string(multiplicity(s)));
  }
  std::vector<SpinState::Amplitude> amps;
  for (const auto& line : lines) {
    const auto fields = split(line, ' ');
    if (fields.size() != 2) {
      throw UsageError("amplitude line '" + line + "' is not 'RE IM'");
    }
    amps.emplace_back(parse_number(fields[0]), parse_number(fields[1]));
  }
  try {
    return SpinState::normalized(s, std::move(amps));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("amplitude file: ") + e.what());
  }
}

SpinState resolve_state(const std::string& text, HalfInt s) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;
  auto no_arg = [&] {
    if (has_arg) throw UsageError("state '" + kind + "' takes no argument");
  };
  if (kind == "equal") {
    no_arg();
    return SpinState::equal_superposition(s);
  }
  if (kind == "coherent-x") {
    no_arg();
    return coherent_x_state(s);
  }
  if (!has_arg) throw UsageError("state '" + text + "' needs an argument");
  if (kind == "basis") {
    const HalfInt sigma = parse_half_int(arg);
    if (!is_projection(s, sigma)) {
      throw UsageError("basis:" + arg + " is not a projection of s=" + s.to_string());
    }
    return SpinState::basis(s, sigma);
  }
  if (kind == "coherent-eq") return prepare_coherent_equatorial(s, parse_angle(arg));
  if (kind == "cat-x") return cat_from(CatAxis::x, arg, s);
  if (kind == "cat-z") return cat_from(CatAxis::z, arg, s);
  if (kind == "amps") return read_amplitude_file(arg, s);
  throw UsageError("unknown state '" + text + "'");
}

MeasurementParams measurement_params(const Scenario& scenario) {
  try {
    return MeasurementParams(scenario.j, scenario.theta, scenario.phi, scenario.g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> preset_names() {
  return {"paper-3-1", "paper-4-2", "paper-4-3-zcat", "paper-4-3-xcat", "paper-4-1-prep"};
}

Scenario preset_scenario(const std::string& name) {
  Scenario sc;
  if (name == "paper-3-1") return sc;
  const double r = 1.0 / std::sqrt(2.0);
  const std::string equal_weights = format_number(r) + ",0," + format_number(r) + ",0";
  if (name == "paper-4-2" || name == "paper-4-3-zcat" || name == "paper-4-3-xcat") {
    sc.s = HalfInt::from_int(10);
    sc.j = HalfInt::from_int(50);
    sc.g = 0.01;
    sc.theta = kPi / 12;
    sc.phi = kPi / 4;
    sc.state = name == "paper-4-2"        ? "coherent-x"
               : name == "paper-4-3-zcat" ? "cat-z:" + equal_weights
                                          : "cat-x:" + equal_weights;
    return sc;
  }
  if (name == "paper-4-1-prep") {
    sc.s = HalfInt::from_int(10);
    sc.j = HalfInt::from_int(10);
    sc.g = 0.25;
    sc.m = HalfInt::from_int(5);
    sc.varphi = 0.0;
    sc.state = "coherent-eq:0";
    sc.theta = kPi / 2;
    sc.phi = 0.0;
    return sc;
  }
  throw UsageError("unknown preset '" + name + "'");
}

std::string describe(const Scenario& sc) {
  std::string out;
  out += "s=" + sc.s.to_string() + "\n";
  out += "j=" + sc.j.to_string() + "\n";
  out += "g=" + format_number(sc.g) + "\n";
  out += "theta=" + format_angle(sc.theta) + "\n";
  out += "phi=" + format_angle(sc.phi) + "\n";
  out += "state=" + sc.state + "\n";
  return out;
}

}  // namespace revspin::cli

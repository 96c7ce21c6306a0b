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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revspin/half_int.hpp"
#include "revspin/measure.hpp"
#include "revspin/spin_state.hpp"

namespace revspin::cli {

struct Scenario {
  HalfInt s = HalfInt::from_twice(1);
  HalfInt j = HalfInt::from_int(10);
  double g = 0.25;
  double theta;
  double phi;
  // equal | basis:SIGMA | coherent-x | coherent-eq:PHI | cat-x:RE,IM,RE,IM
  // | cat-z:RE,IM,RE,IM | amps:FILE
  std::string state = "equal";
  // Hypothesis angle for the information figure.
  double gamma;
  // Kept outcome for the preparation figure.
  HalfInt m = HalfInt::from_int(5);
  double varphi = 0.0;
  // Upper end of the j sweep in the asymptotics figure.
  HalfInt j_max = HalfInt::from_int(50);
  double threshold = 0.95;

  Scenario();
};

/// Flags given on the command line; unset fields keep the defaults.
struct ScenarioOverrides {
  std::optional<HalfInt> s;
  std::optional<HalfInt> j;
  std::optional<double> g;
  std::optional<double> theta;
  std::optional<double> phi;
  std::optional<std::string> state;
  std::optional<double> gamma;
  std::optional<HalfInt> m;
  std::optional<double> varphi;
  std::optional<HalfInt> j_max;
  std::optional<double> threshold;

  void apply(Scenario& scenario) const;
};

/// Throws UsageError on malformed specs or unreadable amplitude files.
SpinState resolve_state(const std::string& text, HalfInt s);

/// Throws UsageError when the angles or spins are out of range.
MeasurementParams measurement_params(const Scenario& scenario);

/// Amplitude file: one "RE IM" line per sigma from s down to -s, each
/// terminated by a newline. The amplitudes are renormalized.
SpinState read_amplitude_file(const std::string& path, HalfInt s);

std::vector<std::string> preset_names();
/// Throws UsageError for unknown names.
Scenario preset_scenario(const std::string& name);

/// key=value lines describing the scenario.
std::string describe(const Scenario& scenario);

}  // namespace revspin::cli

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

#include <vector>

#include <Eigen/Dense>

#include "revspin/half_int.hpp"
#include "revspin/measure.hpp"
#include "revspin/spin_state.hpp"

// Brute-force probe x system simulation, independent of the closed forms.
namespace revspin::oracle {

/// Largest (2j+1)(2s+1) accepted by evolve().
inline constexpr std::size_t kMaxDimension = 4096;

/// Angular momentum matrices in the J_z basis m = j..-j (hbar = 1).
Eigen::MatrixXcd jx(HalfInt j);
Eigen::MatrixXcd jy(HalfInt j);
Eigen::MatrixXcd jz(HalfInt j);

/// Matrix exponential by scaling and squaring of the Taylor series; the
/// series stops once a term's 1-norm falls below 1e-18.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

/// exp(-i theta J_y).
Eigen::MatrixXcd rotation_y(HalfInt j, double theta);

/// exp(-i J_z phi) exp(-i J_y theta) |j, j>.
Eigen::VectorXcd probe_state(HalfInt j, double theta, double phi);

struct JointState {
  HalfInt j;
  HalfInt s;
  Eigen::MatrixXcd amplitudes;  // rows m = j..-j, columns sigma = s..-s

  double norm() const;
};

/// Applies U_i = exp(-2 i g J_z S_z) and then U_p = exp(-i J_y pi/2) to the
/// probe prepared along (theta, phi) and the system state. Throws
/// std::invalid_argument when the dimension exceeds kMaxDimension.
JointState evolve(double theta, double phi, const SpinState& system, HalfInt j, double g);

struct ProbeReadout {
  double probability;
  SpinState post;
};

/// Projects the probe onto J_z = m. Throws NumericalError on a zero-probability outcome.
ProbeReadout projective_probe_measurement(const JointState& joint, HalfInt m);

struct TwoStageEntry {
  HalfInt m;
  HalfInt mp;
  double probability;
  double fidelity;
};

/// First measurement, fresh probe, second measurement at (pi - theta, pi - phi).
/// Outcomes below 1e-300 are reported with zero probability and fidelity.
std::vector<TwoStageEntry> two_stage(const SpinState& state, const MeasurementParams& params);

/// max |amplitude(m, sigma) / c_sigma - a_{m,sigma}| for the equal superposition.
double closed_form_deviation(const MeasurementParams& params, HalfInt s);

}  // namespace revspin::oracle

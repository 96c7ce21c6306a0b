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

#include <complex>
#include <optional>
#include <vector>

#include "revspin/half_int.hpp"
#include "revspin/measure.hpp"
#include "revspin/spin_state.hpp"

namespace revspin {

/// Eigenstate of S_x with eigenvalue s: amplitudes d^{(s)}_{sigma,s}(pi/2).
SpinState coherent_x_state(HalfInt s);

enum class CatAxis { x, z };

/// c_plus |S_axis = +s> + c_minus |S_axis = -s>, renormalized. The two
/// components are exactly orthogonal for s > 0. Throws std::invalid_argument
/// on a zero vector.
SpinState cat_state(CatAxis axis, HalfInt s, std::complex<double> c_plus,
                    std::complex<double> c_minus);

/// Coherent state along the equator at azimuth varphi:
/// c_sigma = e^{-i sigma varphi} 2^{-s} sqrt(C(2s, s + sigma)).
SpinState prepare_coherent_equatorial(HalfInt s, double varphi);

struct PrepResult {
  HalfInt outcome_m;
  double probability;
  SpinState state;
  // rho_m(sigma), sigma = s..-s.
  std::vector<double> distribution;
  // |c'_sigma|^2 before the measurement.
  std::vector<double> initial_distribution;
  // Lattice argmax of rho_m with sigma >= 0; the peaks sit at +-peak.
  HalfInt peak;
  // (1/g) arctan sqrt((j + m)/(j - m)).
  double peak_estimate;
  // Probability outside {+peak, -peak}.
  double leaked_mass;
  // (|peak> + (-1)^{j+m} e^{2 i peak varphi} |-peak>)/sqrt2; absent when peak = 0.
  std::optional<SpinState> two_component_approx;
};

/// Measures {T_m(pi/2, 0)} with a spin-j probe on the equatorial coherent
/// state and keeps outcome m. Throws NumericalError when p'_m vanishes.
PrepResult subspace_prepare(HalfInt s, HalfInt j, double g, double varphi, HalfInt m);

/// Further measurement {T_m(theta', phi')} on a prepared state.
OutcomeTable follow_up(const PrepResult& prepared, const MeasurementParams& params);

/// Effective coupling 2 g sigma_tilde for the subspace {+-sigma_tilde}.
/// Throws std::invalid_argument for sigma_tilde = 0.
double renormalized_g(double g, HalfInt sigma_tilde);

/// Spin-1/2 state with amplitudes (c_{sigma_tilde}, c_{-sigma_tilde}),
/// renormalized. Throws std::invalid_argument when both vanish.
SpinState restrict_to_pair(const SpinState& state, HalfInt sigma_tilde);

/// Inverse of restrict_to_pair for a spin-s host.
SpinState embed_pair(const SpinState& pair, HalfInt s, HalfInt sigma_tilde);

}  // namespace revspin

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

#include "revspin/prep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "revspin/errors.hpp"
#include "revspin/special.hpp"
#include "revspin/wigner.hpp"

namespace revspin {

namespace {

void require_pair(HalfInt s, HalfInt sigma_tilde, const char* what) {
  require_projection(s, sigma_tilde, what);
  if (sigma_tilde.twice() <= 0) {
    throw std::invalid_argument(std::string(what) + ": sigma_tilde must be positive");
  }
}

}  // namespace

SpinState coherent_x_state(HalfInt s) {
  return rotate_state(SpinState::basis(s, s), std::numbers::pi / 2, 0.0);
}

SpinState cat_state(CatAxis axis, HalfInt s, std::complex<double> c_plus,
                    std::complex<double> c_minus) {
  const SpinState up = axis == CatAxis::z ? SpinState::basis(s, s) : coherent_x_state(s);
  const SpinState down = axis == CatAxis::z
                             ? SpinState::basis(s, -s)
                             : rotate_state(SpinState::basis(s, -s), std::numbers::pi / 2, 0.0);
  std::vector<SpinState::Amplitude> amps(up.dim());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] = c_plus * up.amplitudes()[i] + c_minus * down.amplitudes()[i];
  }
  return SpinState::normalized(s, std::move(amps));
}

SpinState prepare_coherent_equatorial(HalfInt s, double varphi) {
  const auto lattice = projections(s);
  std::vector<SpinState::Amplitude> amps(lattice.size());
  const int n = s.twice();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const HalfInt sigma = lattice[i];
    const double magnitude =
        std::exp(0.5 * log_binomial(n, (n + sigma.twice()) / 2) - s.value() * std::log(2.0));
    amps[i] = std::polar(magnitude, -sigma.value() * varphi);
  }
  return SpinState::normalized(s, std::move(amps));
}

PrepResult subspace_prepare(HalfInt s, HalfInt j, double g, double varphi, HalfInt m) {
  require_projection(j, m, "subspace_prepare(m)");
  const SpinState initial = prepare_coherent_equatorial(s, varphi);
  const MeasurementParams params(j, std::numbers::pi / 2, 0.0, g);
  const OutcomeTable table = measure(initial, params);
  const Outcome& outcome = table.at(m);
  if (!outcome.post) {
    throw NumericalError("subspace_prepare: outcome m=" + m.to_string() + " has probability " +
                         std::to_string(outcome.probability));
  }
  const SpinState& post = *outcome.post;
  const auto lattice = projections(s);
  std::vector<double> rho = post.weights();

  // Scan sigma = s..0; the first strict maximum wins, so ties go to larger |sigma|.
  std::size_t best = 0;
  for (std::size_t i = 0; i < lattice.size() && lattice[i].twice() >= 0; ++i) {
    if (rho[i] > rho[best]) best = i;
  }
  const HalfInt peak = lattice[best];
  double kept = rho[best];
  if (peak.twice() != 0) kept += rho[projection_index(s, -peak)];

  std::optional<SpinState> approx;
  if (peak.twice() != 0) {
    std::vector<SpinState::Amplitude> amps(lattice.size(), {0.0, 0.0});
    const double sign = parity_sign(j + m);
    amps[projection_index(s, peak)] = {1.0, 0.0};
    amps[projection_index(s, -peak)] = sign * std::polar(1.0, 2.0 * peak.value() * varphi);
    approx = SpinState::normalized(s, std::move(amps));
  }

  const double estimate =
      std::atan2(std::sqrt((j + m).value()), std::sqrt((j - m).value())) / g;
  return {m,
          outcome.probability,
          post,
          std::move(rho),
          initial.weights(),
          peak,
          estimate,
          std::max(0.0, 1.0 - kept),
          std::move(approx)};
}

OutcomeTable follow_up(const PrepResult& prepared, const MeasurementParams& params) {
  return measure(prepared.state, params);
}

double renormalized_g(double g, HalfInt sigma_tilde) {
  if (sigma_tilde.twice() == 0) {
    throw std::invalid_argument("renormalized_g: sigma_tilde = 0");
  }
  return 2.0 * g * sigma_tilde.value();
}

SpinState restrict_to_pair(const SpinState& state, HalfInt sigma_tilde) {
  require_pair(state.spin(), sigma_tilde, "restrict_to_pair");
  return SpinState::normalized(HalfInt::from_twice(1),
                               {state.amplitude(sigma_tilde), state.amplitude(-sigma_tilde)});
}

SpinState embed_pair(const SpinState& pair, HalfInt s, HalfInt sigma_tilde) {
  require_pair(s, sigma_tilde, "embed_pair");
  if (pair.spin().twice() != 1) {
    throw std::invalid_argument("embed_pair: expected a spin-1/2 state");
  }
  std::vector<SpinState::Amplitude> amps(multiplicity(s), {0.0, 0.0});
  amps[projection_index(s, sigma_tilde)] = pair.amplitudes()[0];
  amps[projection_index(s, -sigma_tilde)] = pair.amplitudes()[1];
  return SpinState(s, std::move(amps));
}

}  // namespace revspin

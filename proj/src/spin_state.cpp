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

#include "revspin/spin_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace revspin {

namespace {

double norm_sq(const std::vector<SpinState::Amplitude>& v) {
  double total = 0.0;
  for (const auto& c : v) {
    total += std::norm(c);
  }
  return total;
}

}  // namespace

SpinState::SpinState(HalfInt s, std::vector<Amplitude> amplitudes)
    : s_(s), amplitudes_(std::move(amplitudes)) {
  if (s.twice() < 0) {
    throw std::invalid_argument("SpinState: negative spin " + s.to_string());
  }
  if (amplitudes_.size() != multiplicity(s)) {
    throw std::invalid_argument("SpinState: expected " + std::to_string(multiplicity(s)) +
                                " amplitudes for s=" + s.to_string() + ", got " +
                                std::to_string(amplitudes_.size()));
  }
  const double n = norm_sq(amplitudes_);
  if (!(std::abs(n - 1.0) <= kNormTolerance)) {
    throw std::invalid_argument("SpinState: amplitudes not normalized (norm^2 = " +
                                std::to_string(n) + ")");
  }
}

SpinState SpinState::normalized(HalfInt s, std::vector<Amplitude> amplitudes) {
  const double n = std::sqrt(norm_sq(amplitudes));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("SpinState: cannot normalize a zero or non-finite vector");
  }
  for (auto& c : amplitudes) {
    c /= n;
  }
  return SpinState(s, std::move(amplitudes));
}

SpinState SpinState::basis(HalfInt s, HalfInt sigma) {
  require_projection(s, sigma, "SpinState::basis");
  std::vector<Amplitude> amps(multiplicity(s));
  amps[projection_index(s, sigma)] = 1.0;
  return SpinState(s, std::move(amps));
}

SpinState SpinState::equal_superposition(HalfInt s) {
  return normalized(s, std::vector<Amplitude>(multiplicity(s), Amplitude{1.0, 0.0}));
}

SpinState::Amplitude SpinState::amplitude(HalfInt sigma) const {
  require_projection(s_, sigma, "SpinState::amplitude");
  return amplitudes_[projection_index(s_, sigma)];
}

std::vector<double> SpinState::weights() const {
  std::vector<double> w(amplitudes_.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::norm(amplitudes_[i]);
  }
  return w;
}

SpinState::Amplitude SpinState::overlap(const SpinState& other) const {
  if (other.s_ != s_) {
    throw std::invalid_argument("SpinState::overlap: spin mismatch");
  }
  Amplitude total{0.0, 0.0};
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    total += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  }
  return total;
}

SpinMoments spin_variance(const SpinState& state) {
  const auto sigmas = projections(state.spin());
  const auto w = state.weights();
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    mean += sigmas[i].value() * w[i];
    second += sigmas[i].value() * sigmas[i].value() * w[i];
  }
  return {mean, second - mean * mean};
}

}  // namespace revspin

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
#include <span>
#include <vector>

#include "revspin/half_int.hpp"

namespace revspin {

/// Normalized pure state of a spin-s system in the S_z basis.
/// Index 0 holds sigma = s; amplitudes run down to sigma = -s.
class SpinState {
 public:
  using Amplitude = std::complex<double>;

  static constexpr double kNormTolerance = 1e-12;

  /// Throws std::invalid_argument if the length is not 2s+1 or the norm
  /// deviates from one by more than kNormTolerance.
  SpinState(HalfInt s, std::vector<Amplitude> amplitudes);

  /// Rescales to unit norm; throws std::invalid_argument on a zero vector.
  static SpinState normalized(HalfInt s, std::vector<Amplitude> amplitudes);
  static SpinState basis(HalfInt s, HalfInt sigma);
  static SpinState equal_superposition(HalfInt s);

  HalfInt spin() const noexcept { return s_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  Amplitude amplitude(HalfInt sigma) const;
  double weight(HalfInt sigma) const { return std::norm(amplitude(sigma)); }
  std::vector<double> weights() const;

  /// <this|other>; both states must share s.
  Amplitude overlap(const SpinState& other) const;
  double fidelity(const SpinState& other) const { return std::abs(overlap(other)); }

 private:
  HalfInt s_;
  std::vector<Amplitude> amplitudes_;
};

struct SpinMoments {
  double mean;
  double variance;
};

/// Mean and variance of sigma under the distribution |c_sigma|^2.
SpinMoments spin_variance(const SpinState& state);

}  // namespace revspin

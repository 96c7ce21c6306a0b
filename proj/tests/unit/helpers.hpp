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
#include <numbers>
#include <random>
#include <vector>

#include "revspin/half_int.hpp"
#include "revspin/measure.hpp"
#include "revspin/spin_state.hpp"

namespace revspin::testing {

inline constexpr double kPi = std::numbers::pi;

inline HalfInt H(int twice) { return HalfInt::from_twice(twice); }

inline MeasurementParams fig1_params(int twice_j = 20) {
  return MeasurementParams(H(twice_j), kPi / 6, kPi / 6, 0.25);
}

inline SpinState random_state(HalfInt s, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<std::complex<double>> amps(multiplicity(s));
  for (auto& a : amps) a = {n(rng), n(rng)};
  return SpinState::normalized(s, std::move(amps));
}

inline MeasurementParams random_params(HalfInt j, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return MeasurementParams(j, 0.05 + (kPi - 0.1) * u(rng), kPi * (2.0 * u(rng) - 1.0) * 0.999,
                           0.05 + 1.2 * u(rng));
}

}  // namespace revspin::testing

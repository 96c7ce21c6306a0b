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
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "revspin/half_int.hpp"

namespace revspin {

/// Probe prepared in sum_j b_j |j, j>, with an indefinite total spin j.
class ProbeSuperposition {
 public:
  using Components = std::map<HalfInt, std::complex<double>>;

  /// Requires j >= 0 for every key and sum |b_j|^2 = 1 within 1e-12.
  explicit ProbeSuperposition(Components components);
  static ProbeSuperposition single(HalfInt j);

  const Components& components() const noexcept { return components_; }
  /// Union of the components' outcome lattices, descending.
  std::vector<HalfInt> outcomes() const;
  /// Whether j - |m| is a nonnegative integer.
  static bool contributes(HalfInt j, HalfInt m) noexcept;

 private:
  Components components_;
};

/// Diagonal (sigma = 1/2, -1/2) of T_m for a spin-1/2 system:
/// sum over contributing j of b_j a^{(j)}_{m,sigma}(theta, phi). Angles are
/// taken as given so reversed angles need no wrapping. Throws
/// std::invalid_argument when no component contributes to m.
Eigen::Vector2cd fluct_operator(const ProbeSuperposition& probe, double theta, double phi,
                                double g, HalfInt m);

struct FluctReversal {
  HalfInt m;
  // Ratio of the two diagonal entries of T_{-m}(pi - theta, pi - phi) T_m(theta, phi).
  std::complex<double> ratio_good;
  // Same for T_m(pi - theta, -phi) T_m(theta, phi).
  std::complex<double> ratio_bad;
};

/// One record per outcome in probe.outcomes(). Throws NumericalError when a
/// product has a vanishing diagonal entry.
std::vector<FluctReversal> fluct_reversal_check(const ProbeSuperposition& probe, double theta,
                                                double phi, double g);

/// max over sigma of |sum_m |<sigma|T_m|sigma>|^2 - 1| for the coherent sums.
/// Cross terms between components make this nonzero in general.
double fluct_completeness_deviation(const ProbeSuperposition& probe, double theta, double phi,
                                    double g);

/// Same with the components kept apart (Kraus operators b_j a^{(j)}_m).
double fluct_component_completeness_deviation(const ProbeSuperposition& probe, double theta,
                                              double phi, double g);

}  // namespace revspin

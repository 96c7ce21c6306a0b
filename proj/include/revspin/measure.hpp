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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "revspin/half_int.hpp"
#include "revspin/spin_state.hpp"

namespace revspin {

/// Tolerance for the strict "!= 0" tests of the admissibility conditions.
inline constexpr double kConditionTolerance = 1e-9;

/// Outcomes with a smaller probability carry no post-measurement state.
inline constexpr double kNegligibleProbability = 1e-300;

/// One measurement {T_m(theta, phi)}: probe spin j prepared along
/// (theta, phi), coupled to the system with effective strength g.
class MeasurementParams {
 public:
  /// Requires j >= 0, theta in [0, pi], phi in (-pi, pi].
  MeasurementParams(HalfInt j, double theta, double phi, double g);

  HalfInt j() const noexcept { return j_; }
  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  double g() const noexcept { return g_; }

 private:
  HalfInt j_;
  double theta_;
  double phi_;
  double g_;
};

/// Bias of the outcome distribution conditioned on sigma:
/// sin(theta) cos(2 g sigma + phi).
double chi(HalfInt sigma, const MeasurementParams& params);

/// Probe amplitude a^{(j)}_{mp,sigma}(theta, phi) for outcome mp given the
/// system eigenvalue sigma, from the closed-form product of two complex
/// powers.
std::complex<double> coefficient_a(const MeasurementParams& params, HalfInt mp, HalfInt sigma);

/// Same closed form without range checks on the angles. The symmetry
/// relations between measurements need theta and phi outside the
/// MeasurementParams ranges (e.g. pi - phi unwrapped).
std::complex<double> coefficient_a(HalfInt j, HalfInt mp, HalfInt sigma, double theta,
                                   double phi, double g);

/// |a|^2 in binomial form.
double coefficient_magnitude_sq(const MeasurementParams& params, HalfInt mp, HalfInt sigma);

/// All coefficients for a spin-s system: rows mp = j..-j, columns sigma = s..-s.
class CoefficientSet {
 public:
  CoefficientSet(const MeasurementParams& params, HalfInt s);

  const MeasurementParams& params() const noexcept { return params_; }
  HalfInt spin() const noexcept { return s_; }
  std::complex<double> operator()(HalfInt mp, HalfInt sigma) const;
  const Eigen::MatrixXcd& table() const noexcept { return table_; }

  /// max over sigma of |sum_mp |a|^2 - 1|.
  double column_norm_deviation() const;

 private:
  MeasurementParams params_;
  HalfInt s_;
  Eigen::MatrixXcd table_;
};

struct BinomialMoments {
  double mean;
  double variance;
};

/// Mean -j chi and variance j (1 - chi^2) / 2 of |a_{mp,sigma}|^2 over mp.
BinomialMoments binomial_moments(const MeasurementParams& params, HalfInt sigma);

/// Gaussian approximation of |a_{mp,sigma}|^2 with the binomial moments.
/// Throws NumericalError when the variance vanishes (chi = +-1).
double clt_approximation(const MeasurementParams& params, HalfInt sigma, HalfInt mp);

struct ConditionReport {
  bool satisfied;
  // Names the failing quantity; empty when satisfied.
  std::string diagnostic;
  // Smallest magnitude among the quantities required to be nonzero.
  double margin;
};

/// Whether outcome probabilities depend on the measured state.
ConditionReport information_condition(const MeasurementParams& params, HalfInt s,
                                      double tol = kConditionTolerance);

/// Whether every a_{m,sigma} is nonzero, i.e. each T_m has a bounded left inverse.
ConditionReport reversibility_condition(const MeasurementParams& params, HalfInt s,
                                        double tol = kConditionTolerance);

/// Diagonal of T_m in the S_z basis (sigma = s..-s).
struct MeasurementOperator {
  HalfInt m;
  Eigen::VectorXcd diagonal;
};

MeasurementOperator measurement_operator(const MeasurementParams& params, HalfInt s, HalfInt m);

struct Outcome {
  HalfInt m;
  double probability;
  // |<psi|psi_m>|; zero when the outcome is negligible.
  double fidelity;
  // Absent when probability < kNegligibleProbability.
  std::optional<SpinState> post;
};

struct OutcomeTable {
  HalfInt j;
  std::vector<Outcome> outcomes;  // m = j..-j

  const Outcome& at(HalfInt m) const;
  double total_probability() const;
  double average_fidelity() const;
  double average_squared_fidelity() const;
  double mean_outcome() const;
};

OutcomeTable measure(const SpinState& state, const MeasurementParams& params);

/// -j sum_sigma chi_sigma |c_sigma|^2.
double expected_outcome(const SpinState& state, const MeasurementParams& params);

}  // namespace revspin

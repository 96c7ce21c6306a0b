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

#include <Eigen/Dense>

#include "revspin/half_int.hpp"
#include "revspin/measure.hpp"
#include "revspin/spin_state.hpp"

namespace revspin {

/// Default fidelity threshold for approximate recovery.
inline constexpr double kApproxRecoveryThreshold = 0.95;

/// Default factor below which the weak-coupling ratio counts as "much less".
inline constexpr double kWeakConditionFactor = 0.1;

/// The reversing measurement {T_m(pi - theta, pi - phi)}, phi wrapped into
/// (-pi, pi]. Wrapping multiplies every T_m by the global sign (-1)^{2j}.
MeasurementParams reversing_params(const MeasurementParams& params);

/// Largest violation, over all mp and sigma, of the two coefficient
/// identities relating (pi - theta, pi - phi) and (pi - theta, -phi) to the
/// original angles.
double symmetry_check(const MeasurementParams& params, HalfInt s);

struct JointEntry {
  HalfInt m;
  HalfInt mp;
  double probability;
  // Zero for entries with probability below kNegligibleProbability.
  double fidelity;
};

/// Statistics of a measurement followed by its reversing measurement.
class JointTable {
 public:
  JointTable(const SpinState& state, const MeasurementParams& first,
             std::vector<JointEntry> entries);

  HalfInt j() const noexcept { return first_.j(); }
  const MeasurementParams& first() const noexcept { return first_; }
  const MeasurementParams& second() const noexcept { return second_; }
  const SpinState& state() const noexcept { return state_; }
  /// Row-major in m = j..-j, then mp = j..-j.
  const std::vector<JointEntry>& entries() const& noexcept { return entries_; }
  // Would dangle when called on a temporary table.
  const std::vector<JointEntry>& entries() const&& = delete;

  const JointEntry& at(HalfInt m, HalfInt mp) const;
  double total_probability() const;
  double marginal_first(HalfInt m) const;
  double average_fidelity() const;
  double average_squared_fidelity() const;
  /// sum_m p_{m,-m}.
  double recovery_probability() const;
  /// Sum of p_{m,mp} over entries with fidelity >= threshold.
  double approx_recovery_probability(double threshold = kApproxRecoveryThreshold) const;

 private:
  SpinState state_;
  MeasurementParams first_;
  MeasurementParams second_;
  std::vector<JointEntry> entries_;
};

/// Joint probabilities and final fidelities for every pair (m, mp).
JointTable joint_measure(const SpinState& state, const MeasurementParams& params);

struct FinalState {
  SpinState state;
  // <psi|psi_out> / |<psi|psi_out>|.
  std::complex<double> phase;
};

/// State after outcomes m then mp. Throws NumericalError if p_{m,mp} vanishes.
FinalState final_state(const SpinState& state, const MeasurementParams& params, HalfInt m,
                       HalfInt mp);

/// Recovery phase e^{i alpha} for outcome m of a spin-1/2 measurement.
std::complex<double> recovery_phase(const MeasurementParams& params, HalfInt m);

/// Total probability of exact recovery for a spin-1/2 system; independent of
/// the state.
double recovery_probability(const MeasurementParams& params);

/// Overload that rejects states with s != 1/2.
double recovery_probability(const SpinState& state, const MeasurementParams& params);

/// Half-width delta_m in m + mp within which the spin-1/2 fidelity stays
/// above 0.95. Infinite when the two outcome distributions coincide.
double recovery_width(const MeasurementParams& params);

/// Exact spin-1/2 fidelity F_{m,mp} as a function of n = m + mp and the
/// weight |c_{1/2}|^2.
double half_spin_fidelity(const MeasurementParams& params, double weight_up, int sum);

double approx_recovery_probability(const SpinState& state, const MeasurementParams& params,
                                   double threshold = kApproxRecoveryThreshold);

/// Half-width for weak coupling and arbitrary s.
double weak_width(const MeasurementParams& params, HalfInt s);

/// g^4 divided by the weak-coupling bound; small values mean the bound holds.
double weak_condition_ratio(const MeasurementParams& params, HalfInt s);

bool weak_condition_satisfied(const MeasurementParams& params, HalfInt s,
                              double factor = kWeakConditionFactor);

/// Second-order expansion of F_{m,mp} in m + mp. Uses the exact width for
/// s = 1/2 and the weak-coupling width otherwise.
double quadratic_fidelity(const SpinState& state, const MeasurementParams& params, HalfInt m,
                          HalfInt mp);

/// 1 - sin^2(theta) sin^2(g).
double damping_factor(const MeasurementParams& params);

/// 2 arg[cos g - i sin g cos theta], in (-2pi, 2pi].
double oscillation_rate(const MeasurementParams& params);

/// Closed-form sum_m p_m F_m^2 for s = 1/2.
double avg_sq_fidelity_first(const SpinState& state, const MeasurementParams& params);

/// Closed-form sum_{m,mp} p_{m,mp} F_{m,mp}^2 for s = 1/2.
double avg_sq_fidelity_joint(const SpinState& state, const MeasurementParams& params);

/// Large-j approximation of recovery_probability.
double asymptotic_recovery(const MeasurementParams& params);

struct AsymptoticsReport {
  double h;
  double k;
  double v;
  double avg_sq_fid_first;
  double avg_sq_fid_joint;
  double q_asymptotic;
};

AsymptoticsReport asymptotics(const SpinState& state, const MeasurementParams& params);

enum class Stage { first, joint };

/// Second-order-in-g average fidelity after the first measurement or after
/// the reversing measurement.
double avg_fidelity_weak(const SpinState& state, const MeasurementParams& params, Stage stage);

struct RecoveryReport {
  double q;
  double q_prime;
  // delta_m for s = 1/2, weak-coupling width otherwise; nullopt if singular.
  std::optional<double> width;
  // e^{i alpha} per outcome m = j..-j; filled for s = 1/2 only.
  std::vector<std::complex<double>> phase_per_m;
};

RecoveryReport recovery_report(const SpinState& state, const MeasurementParams& params,
                               double threshold = kApproxRecoveryThreshold);

/// Two-outcome measurement {R0, R1} undoing outcome m exactly on success.
struct LeftInverse {
  HalfInt m;
  std::complex<double> kappa;
  Eigen::VectorXcd r0;  // diagonal, sigma = s..-s
  Eigen::VectorXd r1;   // diagonal, real and nonnegative

  /// Probability of outcome 0 when applied to a state.
  double success_probability(const SpinState& state) const;
};

/// kappa defaults to min_sigma |a_{m,sigma}|. Throws ConditionError when some
/// |a_{m,sigma}| is at or below kConditionTolerance, and std::invalid_argument
/// when |kappa| exceeds the minimum.
LeftInverse left_inverse_measurement(const MeasurementParams& params, HalfInt s, HalfInt m,
                                     std::optional<std::complex<double>> kappa = std::nullopt);

}  // namespace revspin

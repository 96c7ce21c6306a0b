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

#include "revspin/reverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "revspin/errors.hpp"
#include "revspin/special.hpp"

namespace revspin {

namespace {

constexpr HalfInt kUp = HalfInt::from_twice(1);
constexpr HalfInt kDown = HalfInt::from_twice(-1);

void require_half_spin(HalfInt s, const char* what) {
  if (s.twice() != 1) {
    throw std::invalid_argument(std::string(what) + ": requires a spin-1/2 system, got s=" +
                                s.to_string());
  }
}

Eigen::Index row(HalfInt j, HalfInt m) { return static_cast<Eigen::Index>(projection_index(j, m)); }

// e^{-i mp pi} a_{-mp,-sigma} a_{m,sigma} for every sigma, read off the
// first-measurement coefficient table.
Eigen::VectorXcd reversal_product(const Eigen::MatrixXcd& a, HalfInt j, HalfInt m, HalfInt mp) {
  const Eigen::Index first = row(j, m);
  const Eigen::Index second = row(j, -mp);
  const Eigen::Index n = a.cols();
  Eigen::VectorXcd prod(n);
  const std::complex<double> phase = exp_i_pi(-mp);
  for (Eigen::Index c = 0; c < n; ++c) {
    prod(c) = phase * a(second, n - 1 - c) * a(first, c);
  }
  return prod;
}

struct HalfSpinShape {
  double e_up;
  double e_down;
  double f;
};

HalfSpinShape half_spin_shape(const MeasurementParams& params) {
  const double chi_up = chi(kUp, params);
  const double chi_down = chi(kDown, params);
  if (std::abs(chi_up) >= 1.0 || std::abs(chi_down) >= 1.0) {
    throw NumericalError("recovery width: chi = +-1 makes e_+- singular");
  }
  const double st = std::sin(params.theta());
  const double sg = std::sin(params.g());
  const double cp = std::cos(params.phi());
  const double f = std::atan2(std::sin(2.0 * params.theta()) * cp * sg,
                              1.0 - st * st * (cp * cp + sg * sg));
  return {(1.0 - chi_up) / (1.0 + chi_up), (1.0 - chi_down) / (1.0 + chi_down), f};
}

}  // namespace

MeasurementParams reversing_params(const MeasurementParams& params) {
  return MeasurementParams(params.j(), std::numbers::pi - params.theta(),
                           wrap_angle(std::numbers::pi - params.phi()), params.g());
}

double symmetry_check(const MeasurementParams& params, HalfInt s) {
  const HalfInt j = params.j();
  const double theta = params.theta();
  const double phi = params.phi();
  const double g = params.g();
  const double pi = std::numbers::pi;
  double worst = 0.0;
  for (HalfInt mp : projections(j)) {
    for (HalfInt sigma : projections(s)) {
      const auto reversed = coefficient_a(j, mp, sigma, pi - theta, pi - phi, g);
      const auto mirrored = exp_i_pi(-mp) * coefficient_a(j, -mp, -sigma, theta, phi, g);
      const auto flipped = coefficient_a(j, mp, sigma, pi - theta, -phi, g);
      const auto signed_ = static_cast<double>(parity_sign(j + mp)) *
                           coefficient_a(j, mp, -sigma, theta, phi, g);
      worst = std::max({worst, std::abs(reversed - mirrored), std::abs(flipped - signed_)});
    }
  }
  return worst;
}

JointTable::JointTable(const SpinState& state, const MeasurementParams& first,
                       std::vector<JointEntry> entries)
    : state_(state),
      first_(first),
      second_(reversing_params(first)),
      entries_(std::move(entries)) {
  if (entries_.size() != multiplicity(first.j()) * multiplicity(first.j())) {
    throw std::invalid_argument("JointTable: entry count does not match (2j+1)^2");
  }
}

const JointEntry& JointTable::at(HalfInt m, HalfInt mp) const {
  require_projection(j(), m, "JointTable::at(m)");
  require_projection(j(), mp, "JointTable::at(mp)");
  return entries_[projection_index(j(), m) * multiplicity(j()) + projection_index(j(), mp)];
}

double JointTable::total_probability() const {
  double t = 0.0;
  for (const auto& e : entries_) t += e.probability;
  return t;
}

double JointTable::marginal_first(HalfInt m) const {
  double t = 0.0;
  for (HalfInt mp : projections(j())) t += at(m, mp).probability;
  return t;
}

double JointTable::average_fidelity() const {
  double t = 0.0;
  for (const auto& e : entries_) t += e.probability * e.fidelity;
  return t;
}

double JointTable::average_squared_fidelity() const {
  double t = 0.0;
  for (const auto& e : entries_) t += e.probability * e.fidelity * e.fidelity;
  return t;
}

double JointTable::recovery_probability() const {
  double t = 0.0;
  for (HalfInt m : projections(j())) t += at(m, -m).probability;
  return t;
}

double JointTable::approx_recovery_probability(double threshold) const {
  double t = 0.0;
  for (const auto& e : entries_) {
    if (e.fidelity >= threshold) t += e.probability;
  }
  return t;
}

JointTable joint_measure(const SpinState& state, const MeasurementParams& params) {
  const CoefficientSet coeffs(params, state.spin());
  const auto weights = state.weights();
  const HalfInt j = params.j();
  const auto lattice = projections(j);
  std::vector<JointEntry> entries;
  entries.reserve(lattice.size() * lattice.size());
  for (HalfInt m : lattice) {
    for (HalfInt mp : lattice) {
      const Eigen::VectorXcd prod = reversal_product(coeffs.table(), j, m, mp);
      double p = 0.0;
      std::complex<double> overlap{0.0, 0.0};
      for (Eigen::Index c = 0; c < prod.size(); ++c) {
        const double w = weights[static_cast<std::size_t>(c)];
        p += std::norm(prod(c)) * w;
        overlap += prod(c) * w;
      }
      const double fidelity = p < kNegligibleProbability ? 0.0 : std::abs(overlap) / std::sqrt(p);
      entries.push_back({m, mp, p, fidelity});
    }
  }
  return JointTable(state, params, std::move(entries));
}

FinalState final_state(const SpinState& state, const MeasurementParams& params, HalfInt m,
                       HalfInt mp) {
  require_projection(params.j(), m, "final_state(m)");
  require_projection(params.j(), mp, "final_state(mp)");
  const CoefficientSet coeffs(params, state.spin());
  const Eigen::VectorXcd prod = reversal_product(coeffs.table(), params.j(), m, mp);
  const auto amps = state.amplitudes();
  std::vector<SpinState::Amplitude> out(amps.size());
  double p = 0.0;
  for (std::size_t c = 0; c < out.size(); ++c) {
    out[c] = prod(static_cast<Eigen::Index>(c)) * amps[c];
    p += std::norm(out[c]);
  }
  if (p < kNegligibleProbability) {
    throw NumericalError("final_state: joint probability vanishes for (m, mp) = (" +
                         m.to_string() + ", " + mp.to_string() + ")");
  }
  SpinState result = SpinState::normalized(state.spin(), std::move(out));
  const auto overlap = state.overlap(result);
  const double magnitude = std::abs(overlap);
  const std::complex<double> phase =
      magnitude > 0.0 ? overlap / magnitude : std::complex<double>{1.0, 0.0};
  return {std::move(result), phase};
}

std::complex<double> recovery_phase(const MeasurementParams& params, HalfInt m) {
  const auto product = coefficient_a(params, m, kDown) * coefficient_a(params, m, kUp);
  const double magnitude = std::abs(product);
  if (!(magnitude > 0.0)) {
    throw NumericalError("recovery_phase: a_{m,-1/2} a_{m,1/2} vanishes for m=" + m.to_string());
  }
  return exp_i_pi(m) * product / magnitude;
}

double recovery_probability(const MeasurementParams& params) {
  double q = 0.0;
  for (HalfInt m : projections(params.j())) {
    q += std::norm(coefficient_a(params, m, kDown) * coefficient_a(params, m, kUp));
  }
  return q;
}

double recovery_probability(const SpinState& state, const MeasurementParams& params) {
  require_half_spin(state.spin(), "recovery_probability");
  return recovery_probability(params);
}

double recovery_width(const MeasurementParams& params) {
  const auto [e_up, e_down, f] = half_spin_shape(params);
  const double log_ratio = std::log(e_up / e_down);
  const double denom = log_ratio * log_ratio + 4.0 * f * f;
  if (denom == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return std::sqrt(8.0 / 5.0) / std::sqrt(denom);
}

double half_spin_fidelity(const MeasurementParams& params, double weight_up, int sum) {
  if (!(weight_up >= 0.0 && weight_up <= 1.0)) {
    throw std::invalid_argument("half_spin_fidelity: weight outside [0, 1]");
  }
  const auto [e_up, e_down, f] = half_spin_shape(params);
  const double w_down = 1.0 - weight_up;
  const double up_n = std::pow(e_up, sum);
  const double down_n = std::pow(e_down, sum);
  const double numerator = weight_up * weight_up * up_n + w_down * w_down * down_n +
                           2.0 * weight_up * w_down * std::pow(e_up * e_down, 0.5 * sum) *
                               std::cos(sum * f);
  const double denominator = weight_up * up_n + w_down * down_n;
  return std::sqrt(std::max(numerator, 0.0)) / std::sqrt(denominator);
}

double approx_recovery_probability(const SpinState& state, const MeasurementParams& params,
                                   double threshold) {
  return joint_measure(state, params).approx_recovery_probability(threshold);
}

double weak_width(const MeasurementParams& params, HalfInt s) {
  const double st = std::sin(params.theta());
  const double denom = std::abs(params.g() * st);
  if (s.twice() <= 0 || !(denom > 0.0)) {
    throw NumericalError("weak_width: requires s > 0, g != 0 and sin(theta) != 0");
  }
  const double cp = std::cos(params.phi());
  return std::sqrt(1.0 - st * st * cp * cp) / denom / (2.0 * std::sqrt(10.0) * s.value());
}

double weak_condition_ratio(const MeasurementParams& params, HalfInt s) {
  const double st = std::sin(params.theta());
  if (st == 0.0) {
    throw NumericalError("weak_condition_ratio: sin(theta) = 0");
  }
  const double gap = 1.0 - std::abs(st * std::cos(params.phi()));
  if (gap <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  // g^4 / [ (1/(s^4 j^2)) ((1 - |sin theta cos phi|) / (sqrt2 sin theta))^2 ]
  const double g2 = params.g() * params.g();
  const double s2 = s.value() * s.value();
  const double j = params.j().value();
  return (g2 * s2) * (g2 * s2) * (j * j) * 2.0 * st * st / (gap * gap);
}

bool weak_condition_satisfied(const MeasurementParams& params, HalfInt s, double factor) {
  return weak_condition_ratio(params, s) <= factor;
}

double quadratic_fidelity(const SpinState& state, const MeasurementParams& params, HalfInt m,
                          HalfInt mp) {
  require_projection(params.j(), m, "quadratic_fidelity(m)");
  require_projection(params.j(), mp, "quadratic_fidelity(mp)");
  const double n = (m + mp).value();
  if (n == 0.0) {
    return 1.0;
  }
  const HalfInt s = state.spin();
  if (s.twice() == 1) {
    const double width = recovery_width(params);
    const double w_up = state.weight(kUp);
    const double ratio = n / width;
    return 1.0 - 0.2 * w_up * (1.0 - w_up) * ratio * ratio;
  }
  const double width = weak_width(params, s);
  const double var = spin_variance(state).variance;
  const double ratio = n / width;
  return 1.0 - (var / (s.value() * s.value())) * ratio * ratio / 20.0;
}

double damping_factor(const MeasurementParams& params) {
  const double st = std::sin(params.theta());
  const double sg = std::sin(params.g());
  return 1.0 - st * st * sg * sg;
}

double oscillation_rate(const MeasurementParams& params) {
  return 2.0 * std::atan2(-std::sin(params.g()) * std::cos(params.theta()), std::cos(params.g()));
}

double avg_sq_fidelity_first(const SpinState& state, const MeasurementParams& params) {
  require_half_spin(state.spin(), "avg_sq_fidelity_first");
  const double up = state.weight(kUp);
  const double down = state.weight(kDown);
  const double j = params.j().value();
  return up * up + down * down +
         2.0 * up * down * std::pow(damping_factor(params), j) *
             std::cos(j * oscillation_rate(params));
}

double avg_sq_fidelity_joint(const SpinState& state, const MeasurementParams& params) {
  require_half_spin(state.spin(), "avg_sq_fidelity_joint");
  const double up = state.weight(kUp);
  const double down = state.weight(kDown);
  const double j = params.j().value();
  return up * up + down * down + 2.0 * up * down * std::pow(damping_factor(params), 2.0 * j);
}

double asymptotic_recovery(const MeasurementParams& params) {
  const double chi_up = chi(kUp, params);
  const double chi_down = chi(kDown, params);
  const double v = 1.0 - 0.5 * (chi_up * chi_up + chi_down * chi_down);
  const double j = params.j().value();
  if (!(j > 0.0) || !(v > 0.0)) {
    throw NumericalError("asymptotic_recovery: requires j > 0 and |chi| < 1");
  }
  const double gap = chi_up - chi_down;
  return std::exp(-j * gap * gap / (2.0 * v)) / std::sqrt(2.0 * std::numbers::pi * j * v);
}

AsymptoticsReport asymptotics(const SpinState& state, const MeasurementParams& params) {
  const double chi_up = chi(kUp, params);
  const double chi_down = chi(kDown, params);
  return {damping_factor(params),
          oscillation_rate(params),
          1.0 - 0.5 * (chi_up * chi_up + chi_down * chi_down),
          avg_sq_fidelity_first(state, params),
          avg_sq_fidelity_joint(state, params),
          asymptotic_recovery(params)};
}

double avg_fidelity_weak(const SpinState& state, const MeasurementParams& params, Stage stage) {
  const double var = spin_variance(state).variance;
  const double g = params.g();
  const double j = params.j().value();
  const double st = std::sin(params.theta());
  const double ct = std::cos(params.theta());
  if (stage == Stage::joint) {
    return 1.0 - 2.0 * g * g * j * var * st * st;
  }
  return 1.0 - g * g * j * var * (st * st + 2.0 * j * ct * ct);
}

RecoveryReport recovery_report(const SpinState& state, const MeasurementParams& params,
                               double threshold) {
  const JointTable table = joint_measure(state, params);
  RecoveryReport report{table.recovery_probability(), table.approx_recovery_probability(threshold),
                        std::nullopt, {}};
  const bool half = state.spin().twice() == 1;
  try {
    report.width = half ? recovery_width(params) : weak_width(params, state.spin());
  } catch (const NumericalError&) {
    report.width = std::nullopt;
  }
  if (half) {
    for (HalfInt m : projections(params.j())) {
      try {
        report.phase_per_m.push_back(recovery_phase(params, m));
      } catch (const NumericalError&) {
        report.phase_per_m.emplace_back(0.0, 0.0);
      }
    }
  }
  return report;
}

double LeftInverse::success_probability(const SpinState& state) const {
  const auto amps = state.amplitudes();
  if (static_cast<Eigen::Index>(amps.size()) != r0.size()) {
    throw std::invalid_argument("LeftInverse::success_probability: dimension mismatch");
  }
  double p = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    p += std::norm(r0(static_cast<Eigen::Index>(i)) * amps[i]);
  }
  return p;
}

LeftInverse left_inverse_measurement(const MeasurementParams& params, HalfInt s, HalfInt m,
                                     std::optional<std::complex<double>> kappa) {
  const MeasurementOperator op = measurement_operator(params, s, m);
  const Eigen::VectorXcd& a = op.diagonal;
  const double smallest = a.cwiseAbs().minCoeff();
  if (!(smallest > kConditionTolerance)) {
    throw ConditionError("left_inverse_measurement: T_m has a vanishing diagonal entry for m=" +
                         m.to_string());
  }
  const std::complex<double> k = kappa.value_or(std::complex<double>{smallest, 0.0});
  if (std::abs(k) == 0.0 || std::abs(k) > smallest * (1.0 + 1e-12)) {
    throw std::invalid_argument("left_inverse_measurement: |kappa| must lie in (0, min |a|]");
  }
  LeftInverse out{m, k, Eigen::VectorXcd(a.size()), Eigen::VectorXd(a.size())};
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.r0(i) = k / a(i);
    out.r1(i) = std::sqrt(std::max(0.0, 1.0 - std::norm(out.r0(i))));
  }
  return out;
}

}  // namespace revspin

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

#include "revspin/measure.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "revspin/errors.hpp"
#include "revspin/special.hpp"

namespace revspin {

MeasurementParams::MeasurementParams(HalfInt j, double theta, double phi, double g)
    : j_(j), theta_(theta), phi_(phi), g_(g) {
  if (j.twice() < 0) {
    throw std::invalid_argument("MeasurementParams: negative probe spin " + j.to_string());
  }
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("MeasurementParams: theta outside [0, pi]");
  }
  if (!(phi > -std::numbers::pi && phi <= std::numbers::pi)) {
    throw std::invalid_argument("MeasurementParams: phi outside (-pi, pi]");
  }
  if (!std::isfinite(g)) {
    throw std::invalid_argument("MeasurementParams: g not finite");
  }
}

double chi(HalfInt sigma, const MeasurementParams& params) {
  return std::sin(params.theta()) * std::cos(2.0 * params.g() * sigma.value() + params.phi());
}

std::complex<double> coefficient_a(HalfInt j, HalfInt mp, HalfInt sigma, double theta,
                                   double phi, double g) {
  require_projection(j, mp, "coefficient_a");
  const double half_phase = 0.5 * (2.0 * g * sigma.value() + phi);
  const std::complex<double> lead = std::polar(std::cos(theta / 2.0), -half_phase);
  const std::complex<double> trail = std::polar(std::sin(theta / 2.0), half_phase);
  const int up = (j.twice() - mp.twice()) / 2;    // j - m'
  const int down = (j.twice() + mp.twice()) / 2;  // j + m'
  const double prefactor =
      std::exp(0.5 * log_binomial(j.twice(), down) - j.value() * std::numbers::ln2);
  return prefactor * ipow(lead + trail, up) * ipow(lead - trail, down);
}

std::complex<double> coefficient_a(const MeasurementParams& params, HalfInt mp, HalfInt sigma) {
  return coefficient_a(params.j(), mp, sigma, params.theta(), params.phi(), params.g());
}

double coefficient_magnitude_sq(const MeasurementParams& params, HalfInt mp, HalfInt sigma) {
  const HalfInt j = params.j();
  require_projection(j, mp, "coefficient_magnitude_sq");
  const double x = chi(sigma, params);
  const int up = (j.twice() - mp.twice()) / 2;
  const int down = (j.twice() + mp.twice()) / 2;
  return std::exp(log_binomial(j.twice(), down)) * std::pow((1.0 + x) / 2.0, up) *
         std::pow((1.0 - x) / 2.0, down);
}

CoefficientSet::CoefficientSet(const MeasurementParams& params, HalfInt s)
    : params_(params), s_(s), table_(multiplicity(params.j()), multiplicity(s)) {
  if (s.twice() < 0) {
    throw std::invalid_argument("CoefficientSet: negative system spin");
  }
  const auto rows = projections(params.j());
  const auto cols = projections(s);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      table_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          coefficient_a(params, rows[r], cols[c]);
    }
  }
}

std::complex<double> CoefficientSet::operator()(HalfInt mp, HalfInt sigma) const {
  require_projection(params_.j(), mp, "CoefficientSet(mp)");
  require_projection(s_, sigma, "CoefficientSet(sigma)");
  return table_(static_cast<Eigen::Index>(projection_index(params_.j(), mp)),
                static_cast<Eigen::Index>(projection_index(s_, sigma)));
}

double CoefficientSet::column_norm_deviation() const {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < table_.cols(); ++c) {
    worst = std::max(worst, std::abs(table_.col(c).squaredNorm() - 1.0));
  }
  return worst;
}

BinomialMoments binomial_moments(const MeasurementParams& params, HalfInt sigma) {
  const double x = chi(sigma, params);
  const double j = params.j().value();
  return {-j * x, j * (1.0 - x * x) / 2.0};
}

double clt_approximation(const MeasurementParams& params, HalfInt sigma, HalfInt mp) {
  require_projection(params.j(), mp, "clt_approximation");
  const auto [mean, variance] = binomial_moments(params, sigma);
  if (!(variance > 0.0)) {
    throw NumericalError("clt_approximation: singular distribution (chi = +-1 or j = 0)");
  }
  const double d = mp.value() - mean;
  return std::exp(-d * d / (2.0 * variance)) / std::sqrt(2.0 * std::numbers::pi * variance);
}

ConditionReport information_condition(const MeasurementParams& params, HalfInt s, double tol) {
  if (s.twice() <= 0) {
    return {false, "spin-0 system has a single state", 0.0};
  }
  const double sin_theta = std::abs(std::sin(params.theta()));
  const double sin_g = std::abs(std::sin(params.g()));
  double margin = std::min(sin_theta, sin_g);
  if (sin_theta <= tol) {
    return {false, "sin(theta) = " + std::to_string(sin_theta) + " vanishes", margin};
  }
  if (sin_g <= tol) {
    return {false, "sin(g) = " + std::to_string(sin_g) + " vanishes", margin};
  }
  const bool third_applies =
      s.twice() == 1 || std::abs(std::cos(params.g())) <= tol;
  if (third_applies) {
    const double third =
        std::abs(std::sin((2.0 * s.value() - 1.0) * params.g() + params.phi()));
    margin = std::min(margin, third);
    if (third <= tol) {
      return {false, "sin((2s-1)g + phi) = " + std::to_string(third) + " vanishes", margin};
    }
  }
  return {true, "", margin};
}

ConditionReport reversibility_condition(const MeasurementParams& params, HalfInt s, double tol) {
  const double sin_gap = std::abs(1.0 - std::abs(std::sin(params.theta())));
  double margin = std::numeric_limits<double>::infinity();
  for (HalfInt sigma : projections(s)) {
    const double cos_gap =
        std::abs(1.0 - std::abs(std::cos(2.0 * params.g() * sigma.value() + params.phi())));
    const double local = std::max(sin_gap, cos_gap);
    margin = std::min(margin, local);
    if (sin_gap <= tol && cos_gap <= tol) {
      std::ostringstream msg;
      msg << "a_{m," << sigma << "} vanishes: |sin(theta)| = 1 and |cos(2 g sigma + phi)| = 1";
      return {false, msg.str(), margin};
    }
  }
  return {true, "", margin};
}

MeasurementOperator measurement_operator(const MeasurementParams& params, HalfInt s, HalfInt m) {
  require_projection(params.j(), m, "measurement_operator");
  const auto sigmas = projections(s);
  Eigen::VectorXcd diag(static_cast<Eigen::Index>(sigmas.size()));
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    diag(static_cast<Eigen::Index>(i)) = coefficient_a(params, m, sigmas[i]);
  }
  return {m, std::move(diag)};
}

const Outcome& OutcomeTable::at(HalfInt m) const {
  require_projection(j, m, "OutcomeTable::at");
  return outcomes[projection_index(j, m)];
}

double OutcomeTable::total_probability() const {
  double t = 0.0;
  for (const auto& o : outcomes) t += o.probability;
  return t;
}

double OutcomeTable::average_fidelity() const {
  double t = 0.0;
  for (const auto& o : outcomes) t += o.probability * o.fidelity;
  return t;
}

double OutcomeTable::average_squared_fidelity() const {
  double t = 0.0;
  for (const auto& o : outcomes) t += o.probability * o.fidelity * o.fidelity;
  return t;
}

double OutcomeTable::mean_outcome() const {
  double t = 0.0;
  for (const auto& o : outcomes) t += o.m.value() * o.probability;
  return t;
}

OutcomeTable measure(const SpinState& state, const MeasurementParams& params) {
  const CoefficientSet coeffs(params, state.spin());
  const auto amps = state.amplitudes();
  const auto weights = state.weights();
  OutcomeTable table{params.j(), {}};
  table.outcomes.reserve(multiplicity(params.j()));
  const auto& a = coeffs.table();
  for (HalfInt m : projections(params.j())) {
    const auto r = static_cast<Eigen::Index>(projection_index(params.j(), m));
    double p = 0.0;
    std::complex<double> overlap{0.0, 0.0};
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      p += std::norm(a(r, c)) * weights[static_cast<std::size_t>(c)];
      overlap += a(r, c) * weights[static_cast<std::size_t>(c)];
    }
    if (p < kNegligibleProbability) {
      table.outcomes.push_back({m, p, 0.0, std::nullopt});
      continue;
    }
    const double root = std::sqrt(p);
    std::vector<SpinState::Amplitude> post(amps.size());
    for (std::size_t c = 0; c < post.size(); ++c) {
      post[c] = a(r, static_cast<Eigen::Index>(c)) * amps[c] / root;
    }
    table.outcomes.push_back(
        {m, p, std::abs(overlap) / root, SpinState::normalized(state.spin(), std::move(post))});
  }
  return table;
}

double expected_outcome(const SpinState& state, const MeasurementParams& params) {
  double total = 0.0;
  const auto sigmas = projections(state.spin());
  const auto weights = state.weights();
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    total += chi(sigmas[i], params) * weights[i];
  }
  return -params.j().value() * total;
}

}  // namespace revspin

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

#include "revspin/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "revspin/errors.hpp"

namespace revspin::oracle {

namespace {

constexpr double kTermCutoff = 1e-18;

double one_norm(const Eigen::MatrixXcd& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

Eigen::Index index_of(HalfInt j, HalfInt m) {
  return static_cast<Eigen::Index>(projection_index(j, m));
}

// J_+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>.
Eigen::MatrixXcd raising(HalfInt j) {
  const auto lattice = projections(j);
  const auto n = static_cast<Eigen::Index>(lattice.size());
  Eigen::MatrixXcd up = Eigen::MatrixXcd::Zero(n, n);
  const double jj = j.value() * (j.value() + 1.0);
  for (Eigen::Index c = 1; c < n; ++c) {
    const double m = lattice[static_cast<std::size_t>(c)].value();
    up(c - 1, c) = std::sqrt(jj - m * (m + 1.0));
  }
  return up;
}

}  // namespace

Eigen::MatrixXcd jx(HalfInt j) {
  const Eigen::MatrixXcd up = raising(j);
  return 0.5 * (up + up.adjoint());
}

Eigen::MatrixXcd jy(HalfInt j) {
  const Eigen::MatrixXcd up = raising(j);
  return std::complex<double>(0.0, -0.5) * (up - up.adjoint());
}

Eigen::MatrixXcd jz(HalfInt j) {
  const auto lattice = projections(j);
  Eigen::VectorXcd diag(static_cast<Eigen::Index>(lattice.size()));
  for (std::size_t i = 0; i < lattice.size(); ++i) diag(static_cast<Eigen::Index>(i)) = lattice[i].value();
  return diag.asDiagonal();
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("expm: matrix must be square");
  }
  const double norm = one_norm(a);
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  const Eigen::MatrixXcd scaled = a / std::ldexp(1.0, squarings);
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::MatrixXcd term = result;
  for (int k = 1; k < 200; ++k) {
    term = (term * scaled / static_cast<double>(k)).eval();
    result += term;
    if (one_norm(term) < kTermCutoff) break;
  }
  for (int i = 0; i < squarings; ++i) {
    result = (result * result).eval();
  }
  return result;
}

Eigen::MatrixXcd rotation_y(HalfInt j, double theta) {
  return expm(std::complex<double>(0.0, -theta) * jy(j));
}

Eigen::VectorXcd probe_state(HalfInt j, double theta, double phi) {
  Eigen::VectorXcd top = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(multiplicity(j)));
  top(0) = 1.0;
  return expm(std::complex<double>(0.0, -phi) * jz(j)) * (rotation_y(j, theta) * top);
}

double JointState::norm() const { return std::sqrt(amplitudes.cwiseAbs2().sum()); }

JointState evolve(double theta, double phi, const SpinState& system, HalfInt j, double g) {
  const HalfInt s = system.spin();
  if (multiplicity(j) * multiplicity(s) > kMaxDimension) {
    throw std::invalid_argument("oracle::evolve: dimension (2j+1)(2s+1) exceeds " +
                                std::to_string(kMaxDimension));
  }
  const Eigen::VectorXcd probe = probe_state(j, theta, phi);
  const auto probe_lattice = projections(j);
  const auto system_lattice = projections(s);
  const auto rows = static_cast<Eigen::Index>(probe_lattice.size());
  const auto cols = static_cast<Eigen::Index>(system_lattice.size());
  Eigen::MatrixXcd amps(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double m = probe_lattice[static_cast<std::size_t>(r)].value();
      const double sigma = system_lattice[static_cast<std::size_t>(c)].value();
      amps(r, c) = std::polar(1.0, -2.0 * g * m * sigma) * probe(r) *
                   system.amplitudes()[static_cast<std::size_t>(c)];
    }
  }
  return {j, s, rotation_y(j, std::numbers::pi / 2) * amps};
}

ProbeReadout projective_probe_measurement(const JointState& joint, HalfInt m) {
  require_projection(joint.j, m, "projective_probe_measurement");
  const Eigen::VectorXcd row = joint.amplitudes.row(index_of(joint.j, m)).transpose();
  const double p = row.squaredNorm();
  if (!(p > kNegligibleProbability)) {
    throw NumericalError("projective_probe_measurement: outcome m=" + m.to_string() +
                         " has zero probability");
  }
  return {p, SpinState::normalized(joint.s, {row.data(), row.data() + row.size()})};
}

std::vector<TwoStageEntry> two_stage(const SpinState& state, const MeasurementParams& params) {
  const double pi = std::numbers::pi;
  const HalfInt j = params.j();
  const JointState first = evolve(params.theta(), params.phi(), state, j, params.g());
  std::vector<TwoStageEntry> out;
  for (HalfInt m : projections(j)) {
    const Eigen::VectorXcd row = first.amplitudes.row(index_of(j, m)).transpose();
    if (!(row.squaredNorm() > kNegligibleProbability)) {
      for (HalfInt mp : projections(j)) out.push_back({m, mp, 0.0, 0.0});
      continue;
    }
    const ProbeReadout r1 = projective_probe_measurement(first, m);
    const JointState second = evolve(pi - params.theta(), pi - params.phi(), r1.post, j, params.g());
    for (HalfInt mp : projections(j)) {
      const Eigen::VectorXcd row2 = second.amplitudes.row(index_of(j, mp)).transpose();
      const double p2 = row2.squaredNorm();
      if (!(r1.probability * p2 > kNegligibleProbability)) {
        out.push_back({m, mp, 0.0, 0.0});
        continue;
      }
      const ProbeReadout r2 = projective_probe_measurement(second, mp);
      out.push_back({m, mp, r1.probability * r2.probability, state.fidelity(r2.post)});
    }
  }
  return out;
}

double closed_form_deviation(const MeasurementParams& params, HalfInt s) {
  const SpinState equal = SpinState::equal_superposition(s);
  const JointState joint = evolve(params.theta(), params.phi(), equal, params.j(), params.g());
  double worst = 0.0;
  const double c = equal.amplitudes()[0].real();
  for (HalfInt mp : projections(params.j())) {
    for (HalfInt sigma : projections(s)) {
      const auto amp = joint.amplitudes(index_of(params.j(), mp), index_of(s, sigma));
      worst = std::max(worst, std::abs(amp / c - coefficient_a(params, mp, sigma)));
    }
  }
  return worst;
}

}  // namespace revspin::oracle

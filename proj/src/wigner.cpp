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

#include "revspin/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "revspin/special.hpp"

namespace revspin {

namespace {

// Signed power base^n split into sign and log|.|; 0^0 = 1, 0^n = 0 otherwise.
struct SignedLog {
  int sign;
  double log_magnitude;
};

SignedLog signed_pow(double base, int n) {
  if (n == 0) {
    return {1, 0.0};
  }
  if (base == 0.0) {
    return {0, 0.0};
  }
  const int sign = (base < 0.0 && (n % 2 != 0)) ? -1 : 1;
  return {sign, n * std::log(std::abs(base))};
}

// Above this size the alternating k-sum cancels badly unless j*theta is small.
constexpr int kDirectSumMaxTwiceJ = 24;
constexpr double kMaxReducedAngleTimesJ = 1.0;

double k_sum(HalfInt j, HalfInt mp, HalfInt m, double theta) {

  const int jpm = (j.twice() + m.twice()) / 2;    // j+m
  const int jmm = (j.twice() - m.twice()) / 2;    // j-m
  const int jpmp = (j.twice() + mp.twice()) / 2;  // j+m'
  const int jmmp = (j.twice() - mp.twice()) / 2;  // j-m'
  const int shift = (m.twice() - mp.twice()) / 2;  // m-m'
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const double log_norm = 0.5 * (log_factorial(jpm) + log_factorial(jmm) + log_factorial(jpmp) +
                                 log_factorial(jmmp));

  double total = 0.0;
  const int k_lo = std::max(0, shift);
  const int k_hi = std::min(jpm, jmmp);
  for (int k = k_lo; k <= k_hi; ++k) {
    const SignedLog cos_part = signed_pow(c, j.twice() - 2 * k + shift);
    const SignedLog sin_part = signed_pow(s, 2 * k - shift);
    const int sign = ((k - shift) % 2 == 0 ? 1 : -1) * cos_part.sign * sin_part.sign;
    if (sign == 0) {
      continue;
    }
    const double log_term = log_norm - log_factorial(jpm - k) - log_factorial(k) -
                            log_factorial(jmmp - k) - log_factorial(k - shift) +
                            cos_part.log_magnitude + sin_part.log_magnitude;
    total += sign * std::exp(log_term);
  }
  return total;
}

}  // namespace

double wigner_small_d(HalfInt j, HalfInt mp, HalfInt m, double theta) {
  require_projection(j, mp, "wigner_small_d(mp)");
  require_projection(j, m, "wigner_small_d(m)");
  if (j.twice() <= kDirectSumMaxTwiceJ) {
    return k_sum(j, mp, m, theta);
  }
  return WignerMatrix(j, theta)(mp, m);
}

// Large j: evaluate the k-sum at theta / 2^n, where it is well conditioned,
// then square n times (d(a) d(b) = d(a + b)).
WignerMatrix::WignerMatrix(HalfInt j, double theta)
    : j_(j), theta_(theta), entries_(multiplicity(j), multiplicity(j)) {
  const auto lattice = projections(j);
  int halvings = 0;
  if (j.twice() > kDirectSumMaxTwiceJ) {
    while (std::abs(std::ldexp(theta, -halvings)) * j.value() > kMaxReducedAngleTimesJ) {
      ++halvings;
    }
  }
  const double reduced = std::ldexp(theta, -halvings);
  for (std::size_t r = 0; r < lattice.size(); ++r) {
    for (std::size_t c = 0; c < lattice.size(); ++c) {
      entries_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          k_sum(j, lattice[r], lattice[c], reduced);
    }
  }
  for (int i = 0; i < halvings; ++i) {
    entries_ = (entries_ * entries_).eval();
  }
}

double WignerMatrix::operator()(HalfInt mp, HalfInt m) const {
  require_projection(j_, mp, "WignerMatrix(mp)");
  require_projection(j_, m, "WignerMatrix(m)");
  return entries_(static_cast<Eigen::Index>(projection_index(j_, mp)),
                  static_cast<Eigen::Index>(projection_index(j_, m)));
}

SpinState rotate_state(const SpinState& state, double theta, double phi) {
  const HalfInt s = state.spin();
  const WignerMatrix d(s, theta);
  const auto lattice = projections(s);
  const auto in = state.amplitudes();
  std::vector<SpinState::Amplitude> out(lattice.size());
  for (std::size_t r = 0; r < lattice.size(); ++r) {
    SpinState::Amplitude acc{0.0, 0.0};
    for (std::size_t c = 0; c < lattice.size(); ++c) {
      acc += d.entries()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
    }
    out[r] = std::polar(1.0, -lattice[r].value() * phi) * acc;
  }
  return SpinState::normalized(s, std::move(out));
}

}  // namespace revspin

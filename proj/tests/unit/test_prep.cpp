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

#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "revspin/prep.hpp"
#include "revspin/reverse.hpp"
#include "revspin/special.hpp"

using namespace revspin;
using revspin::testing::H;
using revspin::testing::kPi;

namespace {

// <S_+> from the ladder matrix elements.
std::complex<double> raising_expectation(const SpinState& psi) {
  const auto lattice = projections(psi.spin());
  const double s = psi.spin().value();
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 1; i < lattice.size(); ++i) {
    const double sigma = lattice[i].value();
    acc += std::conj(psi.amplitudes()[i - 1]) * psi.amplitudes()[i] *
           std::sqrt(s * (s + 1) - sigma * (sigma + 1));
  }
  return acc;
}

}  // namespace

TEST_CASE("coherent x state") {
  const auto half = coherent_x_state(H(1));
  CHECK(half.amplitudes()[0].real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(half.amplitudes()[1].real() == doctest::Approx(1 / std::sqrt(2.0)));
  const auto ten = coherent_x_state(H(20));
  CHECK(spin_variance(ten).variance == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(std::abs(spin_variance(ten).mean) < 1e-12);
  CHECK(raising_expectation(ten).real() == doctest::Approx(10.0).epsilon(1e-10));
}

TEST_CASE("cat states") {
  const double r = 1 / std::sqrt(2.0);
  const auto z = cat_state(CatAxis::z, H(20), r, r);
  CHECK(spin_variance(z).variance == doctest::Approx(100.0));
  const auto x = cat_state(CatAxis::x, H(20), r, r);
  CHECK(spin_variance(x).variance == doctest::Approx(5.0).epsilon(1e-10));
  const auto degenerate = cat_state(CatAxis::x, H(20), 1.0, 0.0);
  CHECK(degenerate.fidelity(coherent_x_state(H(20))) == doctest::Approx(1.0));
  const auto minus = cat_state(CatAxis::x, H(20), 0.0, 1.0);
  CHECK(std::abs(minus.overlap(coherent_x_state(H(20)))) < 1e-12);
  CHECK(raising_expectation(minus).real() == doctest::Approx(-10.0).epsilon(1e-10));
  CHECK_THROWS_AS(cat_state(CatAxis::z, H(4), 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("equatorial coherent state") {
  const auto flat = prepare_coherent_equatorial(H(8), 0.0);
  for (auto a : flat.amplitudes()) {
    CHECK(a.real() > 0.0);
    CHECK(a.imag() == 0.0);
  }
  const auto half = prepare_coherent_equatorial(H(1), 0.7);
  CHECK(std::abs(half.amplitudes()[0] - std::polar(1 / std::sqrt(2.0), -0.35)) < 1e-15);
  CHECK(std::abs(half.amplitudes()[1] - std::polar(1 / std::sqrt(2.0), 0.35)) < 1e-15);
  for (double varphi : {0.0, 0.4, -2.0}) {
    const auto psi = prepare_coherent_equatorial(H(20), varphi);
    // <S_varphi> = Re(e^{-i varphi} <S_+>) = s.
    CHECK((std::polar(1.0, -varphi) * raising_expectation(psi)).real() ==
          doctest::Approx(10.0).epsilon(1e-10));
  }
}

TEST_CASE("subspace preparation") {
  const auto r = subspace_prepare(H(20), H(20), 0.25, 0.0, H(10));
  CHECK(r.peak.twice() == 8);
  CHECK(r.probability == doctest::Approx(0.0157068).epsilon(1e-5));
  CHECK(std::round(r.probability * 1000) / 1000 == doctest::Approx(0.016));
  CHECK(r.peak_estimate == doctest::Approx(4 * kPi / 3));
  CHECK(std::lround(r.peak_estimate) == 4);
  CHECK(r.leaked_mass > 0.0);
  CHECK(r.leaked_mass < 1.0);

  double total = 0.0;
  for (HalfInt sigma : projections(H(20))) {
    total += r.distribution[projection_index(H(20), sigma)];
    CHECK(std::abs(r.distribution[projection_index(H(20), sigma)] -
                   r.distribution[projection_index(H(20), -sigma)]) < 1e-12);
    // C(2j, j+m) [cos^2(g sigma)]^{j-m} [sin^2(g sigma)]^{j+m} |c'_sigma|^2 / p'_m
    const double c2 = std::pow(std::cos(0.25 * sigma.value()), 2);
    const double s2 = std::pow(std::sin(0.25 * sigma.value()), 2);
    const double unnorm = std::exp(log_binomial(20, 15)) * std::pow(c2, 5) * std::pow(s2, 15) *
                          r.initial_distribution[projection_index(H(20), sigma)];
    CHECK(std::abs(unnorm / r.probability - r.distribution[projection_index(H(20), sigma)]) < 1e-12);
  }
  CHECK(std::abs(total - 1.0) < 1e-12);
  CHECK(r.distribution[projection_index(H(20), H(0))] < 1e-14);

  REQUIRE(r.two_component_approx.has_value());
  // The approximation carries the same relative phase as the exact peaks.
  const auto& approx = *r.two_component_approx;
  const auto ratio_exact = r.state.amplitude(H(-8)) / r.state.amplitude(H(8));
  const auto ratio_approx = approx.amplitude(H(-8)) / approx.amplitude(H(8));
  CHECK(std::abs(ratio_exact - ratio_approx) < 1e-10);
  const auto phased = subspace_prepare(H(20), H(20), 0.25, 0.6, H(10));
  CHECK(std::abs(phased.state.amplitude(H(-8)) / phased.state.amplitude(H(8)) -
                 phased.two_component_approx->amplitude(H(-8)) /
                     phased.two_component_approx->amplitude(H(8))) < 1e-10);

  const auto bottom = subspace_prepare(H(20), H(20), 0.25, 0.0, H(-20));
  CHECK(bottom.peak.twice() == 0);
  CHECK_FALSE(bottom.two_component_approx.has_value());
}

TEST_CASE("prepared support survives further measurement") {
  const auto r = subspace_prepare(H(12), H(16), 0.3, 0.2, H(6));
  std::vector<bool> support;
  for (double w : r.distribution) support.push_back(w > 0.0);
  const auto table = follow_up(r, MeasurementParams(H(5), 0.9, -1.1, 0.4));
  for (const auto& o : table.outcomes) {
    if (!o.post) continue;
    double leaked = 0.0;
    const auto w = o.post->weights();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!support[i]) leaked += w[i];
    }
    CHECK(leaked < 1e-10);
  }
}

TEST_CASE("renormalized coupling and two-level reduction") {
  CHECK(renormalized_g(0.25, H(1)) == doctest::Approx(0.25));
  CHECK(renormalized_g(0.25, H(8)) == doctest::Approx(2.0));
  CHECK_THROWS_AS(renormalized_g(0.25, H(0)), std::invalid_argument);

  std::mt19937_64 rng(59);
  for (int k = 0; k < 6; ++k) {
    const HalfInt s = H(2 * k + 3);
    const HalfInt sigma = H(2 * (k % 3) + 1);
    const auto pair = revspin::testing::random_state(H(1), rng);
    const auto full = embed_pair(pair, s, sigma);
    CHECK(restrict_to_pair(full, sigma).fidelity(pair) == doctest::Approx(1.0));
    const auto p = revspin::testing::random_params(H(k + 4), rng);
    const auto reduced = MeasurementParams(p.j(), p.theta(), p.phi(), renormalized_g(p.g(), sigma));

    const auto tf = measure(full, p);
    const auto tr = measure(pair, reduced);
    for (std::size_t i = 0; i < tf.outcomes.size(); ++i) {
      CHECK(std::abs(tf.outcomes[i].probability - tr.outcomes[i].probability) < 1e-10);
      CHECK(std::abs(tf.outcomes[i].fidelity - tr.outcomes[i].fidelity) < 1e-10);
    }
    const auto jf = joint_measure(full, p);
    const auto jr = joint_measure(pair, reduced);
    for (std::size_t i = 0; i < jf.entries().size(); ++i) {
      CHECK(std::abs(jf.entries()[i].probability - jr.entries()[i].probability) < 1e-10);
      CHECK(std::abs(jf.entries()[i].fidelity - jr.entries()[i].fidelity) < 1e-10);
    }
    CHECK(std::abs(jf.recovery_probability() - recovery_probability(reduced)) < 1e-10);
    CHECK(std::abs(jf.approx_recovery_probability() - jr.approx_recovery_probability()) < 1e-10);
  }
  CHECK_THROWS_AS(restrict_to_pair(SpinState::basis(H(4), H(0)), H(2)), std::invalid_argument);
}

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
#include <map>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "revspin/errors.hpp"
#include "revspin/reverse.hpp"
#include "revspin/wigner.hpp"

using namespace revspin;
using revspin::testing::fig1_params;
using revspin::testing::H;
using revspin::testing::kPi;

namespace {

SpinState coherent_x(HalfInt s) { return rotate_state(SpinState::basis(s, s), kPi / 2, 0.0); }

MeasurementParams weak_params() { return MeasurementParams(H(100), kPi / 12, kPi / 4, 0.01); }

double round_to(double x, int decimals) {
  const double f = std::pow(10.0, decimals);
  return std::round(x * f) / f;
}

}  // namespace

TEST_CASE("reversing parameters") {
  const auto r = reversing_params(fig1_params());
  CHECK(r.theta() == doctest::Approx(5 * kPi / 6));
  CHECK(r.phi() == doctest::Approx(5 * kPi / 6));
  const auto w = reversing_params(weak_params());
  CHECK(w.theta() == doctest::Approx(11 * kPi / 12));
  CHECK(w.phi() == doctest::Approx(3 * kPi / 4));
  const auto fixed = reversing_params(MeasurementParams(H(3), kPi / 2, kPi / 2, 0.4));
  CHECK(fixed.theta() == doctest::Approx(kPi / 2));
  CHECK(fixed.phi() == doctest::Approx(kPi / 2));
  // phi = -pi/2 wraps from 3pi/2 to -pi/2.
  CHECK(reversing_params(MeasurementParams(H(3), 1.0, -kPi / 2, 0.4)).phi() ==
        doctest::Approx(-kPi / 2));
}

TEST_CASE("coefficient symmetries") {
  CHECK(symmetry_check(fig1_params(), H(1)) < 1e-10);
  std::mt19937_64 rng(17);
  for (int k = 0; k < 20; ++k) {
    CHECK(symmetry_check(revspin::testing::random_params(H(k % 9), rng), H(k % 5)) < 1e-10);
  }
  CHECK(symmetry_check(MeasurementParams(H(2), kPi / 2, 0.0, 0.6), H(2)) < 1e-10);
}

TEST_CASE("joint table for the equal-weight spin-1/2 example") {
  const auto psi = SpinState::equal_superposition(H(1));
  const auto p = fig1_params();
  const auto t = joint_measure(psi, p);
  CHECK(std::abs(t.total_probability() - 1.0) < 1e-12);
  CHECK(t.average_fidelity() == doctest::Approx(0.92766).epsilon(1e-5));
  CHECK(round_to(t.average_fidelity(), 2) == doctest::Approx(0.93));
  CHECK(t.recovery_probability() == doctest::Approx(0.12631).epsilon(1e-4));
  CHECK(round_to(t.recovery_probability(), 2) == doctest::Approx(0.13));
  CHECK(t.approx_recovery_probability() == doctest::Approx(0.57467).epsilon(1e-5));
  CHECK(round_to(t.approx_recovery_probability(), 2) == doctest::Approx(0.57));
  CHECK(recovery_width(p) == doctest::Approx(2.30993).epsilon(1e-5));
  CHECK(round_to(recovery_width(p), 1) == doctest::Approx(2.3));
  // Frozen from an independent matrix-exponential evaluation.
  CHECK(t.at(H(-8), H(8)).probability == doctest::Approx(0.0330867807748753).epsilon(1e-10));
  CHECK(t.at(H(-8), H(4)).probability == doctest::Approx(0.0186220890366283).epsilon(1e-10));
  CHECK(t.at(H(-8), H(4)).fidelity == doctest::Approx(0.963852072493098).epsilon(1e-10));
  CHECK(t.second().theta() == doctest::Approx(5 * kPi / 6));

  const auto first = measure(psi, p);
  for (HalfInt m : projections(H(20))) {
    CHECK(std::abs(t.marginal_first(m) - first.at(m).probability) < 1e-12);
    CHECK(std::abs(t.at(m, -m).fidelity - 1.0) < 1e-12);
  }
}

TEST_CASE("spin-1/2 fidelity depends only on m + m'") {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 10; ++k) {
    const auto psi = revspin::testing::random_state(H(1), rng);
    const auto p = revspin::testing::random_params(H(2 * k + 1), rng);
    const auto t = joint_measure(psi, p);
    const double up = psi.weight(H(1));
    std::map<int, double> by_sum;
    for (const auto& e : t.entries()) {
      if (e.probability < 1e-200) continue;
      const auto [it, fresh] = by_sum.emplace((e.m + e.mp).twice(), e.fidelity);
      CHECK(std::abs(e.fidelity - it->second) < 1e-12);
      CHECK(std::abs(e.fidelity - half_spin_fidelity(p, up, (e.m + e.mp).twice() / 2)) < 1e-10);
    }
  }
}

TEST_CASE("reduced form equals the explicit second measurement") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 8; ++k) {
    const HalfInt j = H(k + 1);
    const HalfInt s = H(k % 4 + 1);
    const auto p = revspin::testing::random_params(j, rng);
    const auto psi = revspin::testing::random_state(s, rng);
    const auto t = joint_measure(psi, p);
    const auto second = reversing_params(p);
    for (HalfInt m : projections(j)) {
      for (HalfInt mp : projections(j)) {
        double prob = 0.0;
        std::complex<double> overlap{0.0, 0.0};
        std::complex<double> wrapped{0.0, 0.0};
        for (HalfInt sigma : projections(s)) {
          const auto direct = coefficient_a(j, mp, sigma, kPi - p.theta(), kPi - p.phi(), p.g()) *
                              coefficient_a(p, m, sigma);
          prob += std::norm(direct) * psi.weight(sigma);
          overlap += direct * psi.weight(sigma);
          wrapped = coefficient_a(second, mp, sigma) /
                    coefficient_a(j, mp, sigma, kPi - p.theta(), kPi - p.phi(), p.g());
          // Wrapping pi - phi into (-pi, pi] flips the sign of T for half-integer j.
          const double expected =
              p.phi() < 0.0 ? static_cast<double>(parity_sign(HalfInt::from_int(j.twice()))) : 1.0;
          CHECK(std::abs(wrapped - expected) < 1e-9);
        }
        CHECK(std::abs(t.at(m, mp).probability - prob) < 1e-12);
        if (prob > 1e-12) {
          CHECK(std::abs(t.at(m, mp).fidelity - std::abs(overlap) / std::sqrt(prob)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("final states") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 10; ++k) {
    const auto psi = revspin::testing::random_state(H(1), rng);
    const auto p = revspin::testing::random_params(H(k + 1), rng);
    for (HalfInt m : projections(p.j())) {
      const auto out = final_state(psi, p, m, -m);
      CHECK(std::abs(std::abs(out.phase) - 1.0) < 1e-12);
      for (HalfInt sigma : projections(H(1))) {
        CHECK(std::abs(out.state.amplitude(sigma) - out.phase * psi.amplitude(sigma)) < 1e-10);
      }
      // T_{-m}(pi - theta, pi - phi) T_m(theta, phi) is proportional to the identity.
      const auto prod_up = coefficient_a(p.j(), -m, H(1), kPi - p.theta(), kPi - p.phi(), p.g()) *
                           coefficient_a(p, m, H(1));
      const auto prod_down = coefficient_a(p.j(), -m, H(-1), kPi - p.theta(), kPi - p.phi(), p.g()) *
                             coefficient_a(p, m, H(-1));
      CHECK(std::abs(prod_up / prod_down - 1.0) < 1e-10);
    }
  }
  // Higher spin: the same product is not proportional to the identity.
  const auto big = MeasurementParams(H(20), kPi / 6, kPi / 6, 0.25);
  const HalfInt m = H(-6);
  const auto prod = [&](HalfInt sigma) {
    return coefficient_a(big.j(), -m, sigma, kPi - big.theta(), kPi - big.phi(), big.g()) *
           coefficient_a(big, m, sigma);
  };
  CHECK(std::abs(prod(H(20)) / prod(H(6)) - 1.0) > 1e-3);
  CHECK_THROWS_AS(final_state(SpinState::basis(H(1), H(1)), MeasurementParams(H(40), kPi / 2, 0.0, 0.0),
                              H(40), H(40)),
                  NumericalError);
}

TEST_CASE("exact recovery probability") {
  const auto p = fig1_params();
  CHECK(round_to(recovery_probability(p), 2) == doctest::Approx(0.13));
  // No interaction: every pair (m, m') recovers the state, so q' = 1, while
  // q keeps only m' = -m and equals sum_m p_m^2.
  const auto off = MeasurementParams(H(20), 1.0, 0.3, 0.0);
  const auto off_table = measure(SpinState::equal_superposition(H(1)), off);
  double sum_sq = 0.0;
  for (const auto& o : off_table.outcomes) sum_sq += o.probability * o.probability;
  CHECK(recovery_probability(off) == doctest::Approx(sum_sq).epsilon(1e-12));
  CHECK(approx_recovery_probability(SpinState::equal_superposition(H(1)), off) == doctest::Approx(1.0));
  std::mt19937_64 rng(31);
  for (int k = 0; k < 5; ++k) {
    const auto psi = revspin::testing::random_state(H(1), rng);
    CHECK(std::abs(recovery_probability(psi, p) - joint_measure(psi, p).recovery_probability()) < 1e-12);
  }
  const auto tiny = MeasurementParams(H(1), 1.2, 0.4, 0.7);
  const auto t = joint_measure(SpinState::equal_superposition(H(1)), tiny);
  CHECK(std::abs(recovery_probability(tiny) - (t.at(H(1), H(-1)).probability + t.at(H(-1), H(1)).probability)) <
        1e-12);
  CHECK_THROWS_AS(recovery_probability(SpinState::basis(H(2), H(0)), p), std::invalid_argument);
}

TEST_CASE("recovery phases and report") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 10; ++k) {
    const auto psi = revspin::testing::random_state(H(1), rng);
    const auto p = revspin::testing::random_params(H(k + 2), rng);
    const auto rep = recovery_report(psi, p);
    CHECK(rep.q >= 0.0);
    CHECK(rep.q <= rep.q_prime + 1e-12);
    CHECK(rep.q_prime <= 1.0 + 1e-12);
    REQUIRE(rep.phase_per_m.size() == multiplicity(p.j()));
    for (std::size_t i = 0; i < rep.phase_per_m.size(); ++i) {
      CHECK(std::abs(std::abs(rep.phase_per_m[i]) - 1.0) < 1e-12);
      const HalfInt m = projections(p.j())[i];
      const auto out = final_state(psi, p, m, -m);
      CHECK(std::abs(out.phase - rep.phase_per_m[i]) < 1e-9);
    }
  }
}

TEST_CASE("recovery width") {
  CHECK(recovery_width(fig1_params(20)) == doctest::Approx(recovery_width(fig1_params(200))));
  const auto p = fig1_params();
  const auto psi = SpinState::equal_superposition(H(1));
  const auto t = joint_measure(psi, p);
  const double width = recovery_width(p);
  for (const auto& e : t.entries()) {
    const double n = (e.m + e.mp).value();
    if (std::abs(n) <= 2.0) {
      CHECK(e.fidelity >= 1.0 - (n / width) * (n / width) / 20.0 - 1e-12);
    }
  }
  CHECK(std::isinf(recovery_width(MeasurementParams(H(4), 1.0, kPi / 2, 0.0))));
  CHECK_THROWS_AS(recovery_width(MeasurementParams(H(4), kPi / 2, 0.0, 0.0)), NumericalError);
}

TEST_CASE("weak coupling width and condition") {
  const auto p = weak_params();
  CHECK(weak_width(p, H(20)) == doctest::Approx(6.00587).epsilon(1e-5));
  CHECK(round_to(weak_width(p, H(20)), 1) == doctest::Approx(6.0));
  const auto half_g = MeasurementParams(H(100), kPi / 12, kPi / 4, 0.005);
  CHECK(weak_width(half_g, H(20)) == doctest::Approx(2 * weak_width(p, H(20))));
  CHECK(weak_width(p, H(40)) == doctest::Approx(weak_width(p, H(20)) / 2));
  CHECK_THROWS_AS(weak_width(MeasurementParams(H(4), 0.0, 0.1, 0.1), H(2)), NumericalError);

  CHECK(weak_condition_ratio(p, H(20)) == doctest::Approx(0.0502).epsilon(1e-3));
  CHECK(weak_condition_satisfied(p, H(20)));
  // Macroscopic regime s = j = 1e8: ratio 2 at theta = 1e-8, passing an order lower.
  const HalfInt huge = H(200000000);
  CHECK(weak_condition_ratio(MeasurementParams(huge, 1e-8, 0.0, 1e-8), huge) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(weak_condition_satisfied(MeasurementParams(huge, 1e-9, 0.0, 1e-8), huge));
  CHECK_FALSE(weak_condition_satisfied(MeasurementParams(H(100), kPi / 4, 0.0, 0.5), H(20)));
  CHECK_THROWS_AS(weak_condition_ratio(MeasurementParams(H(4), 0.0, 0.1, 0.1), H(2)), NumericalError);
}

TEST_CASE("weak-coupling statistics for the coherent x state") {
  const auto psi = coherent_x(H(20));
  const auto p = weak_params();
  const auto first = measure(psi, p);
  CHECK(first.average_fidelity() == doctest::Approx(0.089181).epsilon(1e-4));
  CHECK(round_to(first.average_fidelity(), 3) == doctest::Approx(0.089));
  const auto t = joint_measure(psi, p);
  CHECK(t.average_fidelity() == doctest::Approx(0.99667).epsilon(1e-5));
  CHECK(round_to(t.average_fidelity(), 3) == doctest::Approx(0.997));
  CHECK(t.approx_recovery_probability() == doctest::Approx(0.9999226).epsilon(1e-7));
  CHECK(round_to(t.approx_recovery_probability(), 5) == doctest::Approx(0.99992));
  CHECK(std::abs(avg_fidelity_weak(psi, p, Stage::joint) - t.average_fidelity()) < 5e-3);

  double worst = 0.0;
  for (const auto& e : t.entries()) {
    if (std::abs((e.m + e.mp).value()) > 6.0 || e.probability <= 1e-9) continue;
    worst = std::max(worst, std::abs(e.fidelity - quadratic_fidelity(psi, p, e.m, e.mp)));
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("quadratic fidelity") {
  const auto psi = SpinState::equal_superposition(H(1));
  const auto p = fig1_params();
  CHECK(quadratic_fidelity(psi, p, H(4), H(-4)) == 1.0);
  // 0.95 at |m + m'| = delta m, evaluated through the s = 1/2 formula directly.
  const double width = recovery_width(p);
  CHECK(1.0 - 0.2 * 0.25 * 1.0 == doctest::Approx(0.95));
  CHECK(quadratic_fidelity(psi, p, H(2), H(0)) == doctest::Approx(1.0 - 0.05 / (width * width)));

  const auto conv = [](double g) {
    const auto q = MeasurementParams(H(16), kPi / 5, kPi / 7, g);
    const auto x = coherent_x(H(3));
    const auto t = joint_measure(x, q);
    double worst = 0.0;
    for (const auto& e : t.entries()) {
      worst = std::max(worst, std::abs(e.fidelity - quadratic_fidelity(x, q, e.m, e.mp)));
    }
    return worst;
  };
  CHECK(conv(0.02) / conv(0.01) >= 6.0);
}

TEST_CASE("average squared fidelity closed forms") {
  std::mt19937_64 rng(41);
  for (int tj = 1; tj <= 50; ++tj) {
    const auto psi = revspin::testing::random_state(H(1), rng);
    const auto p = revspin::testing::random_params(H(tj), rng);
    CHECK(std::abs(avg_sq_fidelity_first(psi, p) - measure(psi, p).average_squared_fidelity()) < 1e-10);
    CHECK(std::abs(avg_sq_fidelity_joint(psi, p) - joint_measure(psi, p).average_squared_fidelity()) <
          1e-10);
  }
  CHECK_THROWS_AS(avg_sq_fidelity_first(SpinState::basis(H(2), H(0)), fig1_params()), std::invalid_argument);

  // No oscillation after the reversal: monotone in j.
  const auto psi = SpinState::equal_superposition(H(1));
  double prev = 2.0;
  for (int tj = 1; tj <= 60; ++tj) {
    const double v = avg_sq_fidelity_joint(psi, fig1_params(tj));
    CHECK(v <= prev + 1e-15);
    prev = v;
  }

  // Period of the damped oscillation after the first measurement.
  const double k = oscillation_rate(fig1_params());
  const double period = 2 * kPi / std::abs(k);
  std::vector<int> maxima;
  auto f = [&](int j) { return avg_sq_fidelity_first(psi, fig1_params(2 * j)); };
  for (int j = 1; j < 80; ++j) {
    if (f(j) > f(j - 1) && f(j) > f(j + 1)) maxima.push_back(j);
  }
  REQUIRE(maxima.size() >= 3);
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    CHECK(std::abs((maxima[i] - maxima[i - 1]) - period) < 1.5);
  }

  // cos(jk) = 1 reduces to the damping term alone.
  const auto flat = MeasurementParams(H(8), kPi / 2, kPi / 5, 0.3);
  CHECK(oscillation_rate(flat) == doctest::Approx(0.0));
  const auto x = SpinState::normalized(H(1), {{0.6, 0.0}, {0.8, 0.0}});
  const double h = damping_factor(flat);
  CHECK(avg_sq_fidelity_first(x, flat) ==
        doctest::Approx(1.0 - 2 * 0.36 * 0.64 * (1.0 - std::pow(h, 4.0))));
}

TEST_CASE("asymptotic recovery") {
  const auto rel = [](int tj) {
    const auto p = fig1_params(tj);
    return std::abs(asymptotic_recovery(p) - recovery_probability(p)) / recovery_probability(p);
  };
  CHECK(rel(200) < rel(40));
  const auto flat = MeasurementParams(H(20), kPi / 3, kPi / 2, 0.0);
  const double v = 1.0 - std::pow(std::sin(kPi / 3) * std::cos(kPi / 2), 2);
  CHECK(asymptotic_recovery(flat) == doctest::Approx(1.0 / std::sqrt(2 * kPi * 10 * v)));
  double prev = 1.0;
  for (int tj = 2; tj <= 100; tj += 2) {
    const double q = recovery_probability(fig1_params(tj));
    CHECK(q < prev);
    prev = q;
  }
  const auto rep = asymptotics(SpinState::equal_superposition(H(1)), fig1_params());
  CHECK(rep.h >= 0.0);
  CHECK(rep.h <= 1.0);
}

TEST_CASE("weak average fidelities") {
  const auto p = weak_params();
  for (auto stage : {Stage::first, Stage::joint}) {
    CHECK(avg_fidelity_weak(SpinState::basis(H(20), H(6)), p, stage) == 1.0);
  }
  const auto psi = coherent_x(H(20));
  const auto a = MeasurementParams(H(20), kPi / 12, kPi / 4, 0.02);
  const auto b = MeasurementParams(H(40), kPi / 12, kPi / 4, 0.02 / std::sqrt(2.0));
  CHECK(avg_fidelity_weak(psi, b, Stage::first) < avg_fidelity_weak(psi, a, Stage::first));
  CHECK(avg_fidelity_weak(psi, b, Stage::joint) == doctest::Approx(avg_fidelity_weak(psi, a, Stage::joint)));
}

TEST_CASE("left-inverse measurement") {
  std::mt19937_64 rng(43);
  for (int tj = 0; tj <= 8; ++tj) {
    for (int ts = 0; ts <= 6; ++ts) {
      const auto p = revspin::testing::random_params(H(tj), rng);
      for (HalfInt m : projections(H(tj))) {
        const auto r = left_inverse_measurement(p, H(ts), m);
        const auto t = measurement_operator(p, H(ts), m).diagonal;
        CHECK((r.r0.cwiseProduct(t).array() - r.kappa).abs().maxCoeff() < 1e-10);
        CHECK(((r.r0.cwiseAbs2() + r.r1.cwiseAbs2()).array() - 1.0).abs().maxCoeff() < 1e-10);
        CHECK(r.r0.cwiseAbs2().maxCoeff() <= 1.0 + 1e-12);
        CHECK(std::abs(r.r0.cwiseAbs2().maxCoeff() - 1.0) < 1e-12);
      }
    }
  }
  const auto p = fig1_params();
  const auto psi = revspin::testing::random_state(H(1), rng);
  const auto table = measure(psi, p);
  for (HalfInt m : projections(H(20))) {
    const auto r = left_inverse_measurement(p, H(1), m);
    CHECK(r.success_probability(*table.at(m).post) ==
          doctest::Approx(std::norm(r.kappa) / table.at(m).probability).epsilon(1e-10));
    // For s = 1/2, R0 is proportional to T_{-m}(pi - theta, pi - phi).
    const auto ratio_up = r.r0(0) / coefficient_a(p.j(), -m, H(1), kPi - p.theta(), kPi - p.phi(), p.g());
    const auto ratio_down = r.r0(1) / coefficient_a(p.j(), -m, H(-1), kPi - p.theta(), kPi - p.phi(), p.g());
    CHECK(std::abs(ratio_up / ratio_down - 1.0) < 1e-10);
  }
  CHECK_THROWS_AS(left_inverse_measurement(MeasurementParams(H(4), kPi / 2, 0.0, 0.3), H(2), H(0)),
                  ConditionError);
  CHECK_THROWS_AS(left_inverse_measurement(p, H(1), H(0), std::complex<double>(2.0, 0.0)),
                  std::invalid_argument);
}

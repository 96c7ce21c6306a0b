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

#include "revspin/fluct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "revspin/errors.hpp"
#include "revspin/measure.hpp"

namespace revspin {

namespace {

constexpr HalfInt kUp = HalfInt::from_twice(1);
constexpr HalfInt kDown = HalfInt::from_twice(-1);

std::complex<double> diagonal_ratio(const Eigen::Vector2cd& product, HalfInt m) {
  if (!(std::abs(product(1)) > kNegligibleProbability)) {
    throw NumericalError("fluct_reversal_check: vanishing diagonal entry at m=" + m.to_string());
  }
  return product(0) / product(1);
}

}  // namespace

ProbeSuperposition::ProbeSuperposition(Components components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("ProbeSuperposition: no components");
  }
  double norm = 0.0;
  for (const auto& [j, b] : components_) {
    if (j.twice() < 0) {
      throw std::invalid_argument("ProbeSuperposition: negative spin " + j.to_string());
    }
    norm += std::norm(b);
  }
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("ProbeSuperposition: sum |b_j|^2 deviates from 1");
  }
}

ProbeSuperposition ProbeSuperposition::single(HalfInt j) {
  return ProbeSuperposition(Components{{j, {1.0, 0.0}}});
}

std::vector<HalfInt> ProbeSuperposition::outcomes() const {
  std::set<HalfInt> all;
  for (const auto& [j, b] : components_) {
    for (HalfInt m : projections(j)) all.insert(m);
  }
  return {all.rbegin(), all.rend()};
}

bool ProbeSuperposition::contributes(HalfInt j, HalfInt m) noexcept { return is_projection(j, m); }

Eigen::Vector2cd fluct_operator(const ProbeSuperposition& probe, double theta, double phi,
                                double g, HalfInt m) {
  Eigen::Vector2cd out = Eigen::Vector2cd::Zero();
  bool any = false;
  for (const auto& [j, b] : probe.components()) {
    if (!ProbeSuperposition::contributes(j, m)) continue;
    any = true;
    out(0) += b * coefficient_a(j, m, kUp, theta, phi, g);
    out(1) += b * coefficient_a(j, m, kDown, theta, phi, g);
  }
  if (!any) {
    throw std::invalid_argument("fluct_operator: no probe component contributes to m=" +
                                m.to_string());
  }
  return out;
}

std::vector<FluctReversal> fluct_reversal_check(const ProbeSuperposition& probe, double theta,
                                                double phi, double g) {
  const double pi = std::numbers::pi;
  std::vector<FluctReversal> out;
  for (HalfInt m : probe.outcomes()) {
    const Eigen::Vector2cd first = fluct_operator(probe, theta, phi, g, m);
    const Eigen::Vector2cd good =
        fluct_operator(probe, pi - theta, pi - phi, g, -m).cwiseProduct(first);
    const Eigen::Vector2cd bad = fluct_operator(probe, pi - theta, -phi, g, m).cwiseProduct(first);
    out.push_back({m, diagonal_ratio(good, m), diagonal_ratio(bad, m)});
  }
  return out;
}

double fluct_completeness_deviation(const ProbeSuperposition& probe, double theta, double phi,
                                    double g) {
  Eigen::Vector2d total = Eigen::Vector2d::Zero();
  for (HalfInt m : probe.outcomes()) {
    total += fluct_operator(probe, theta, phi, g, m).cwiseAbs2();
  }
  return (total.array() - 1.0).abs().maxCoeff();
}

double fluct_component_completeness_deviation(const ProbeSuperposition& probe, double theta,
                                              double phi, double g) {
  Eigen::Vector2d total = Eigen::Vector2d::Zero();
  for (const auto& [j, b] : probe.components()) {
    for (HalfInt m : projections(j)) {
      total(0) += std::norm(b * coefficient_a(j, m, kUp, theta, phi, g));
      total(1) += std::norm(b * coefficient_a(j, m, kDown, theta, phi, g));
    }
  }
  return (total.array() - 1.0).abs().maxCoeff();
}

}  // namespace revspin

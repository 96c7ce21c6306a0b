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

#include "revspin/bayes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "revspin/reverse.hpp"

namespace revspin {

namespace {

constexpr HalfInt kHalf = HalfInt::from_twice(1);

struct Posterior {
  double a;
  double b;
};

// Equal priors; an impossible outcome keeps the prior.
Posterior bayes_update(double likelihood_a, double likelihood_b) {
  const double total = likelihood_a + likelihood_b;
  if (!(total > kNegligibleProbability)) {
    return {0.5, 0.5};
  }
  return {likelihood_a / total, likelihood_b / total};
}

}  // namespace

HypothesisPair make_hypothesis_pair(double gamma) {
  if (!(gamma > 0.0 && gamma < std::numbers::pi / 2)) {
    throw std::invalid_argument("make_hypothesis_pair: gamma must lie in (0, pi/2), got " +
                                std::to_string(gamma));
  }
  const double c = std::cos(gamma / 2);
  const double s = std::sin(gamma / 2);
  return {gamma, SpinState::normalized(kHalf, {{c, 0.0}, {s, 0.0}}),
          SpinState::normalized(kHalf, {{-s, 0.0}, {c, 0.0}})};
}

double binary_entropy(double p) {
  double h = 0.0;
  for (double x : {p, 1.0 - p}) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double prior_entropy() { return binary_entropy(0.5); }

std::vector<FirstStageInfo> analyze_first(const HypothesisPair& pair,
                                          const MeasurementParams& params) {
  const OutcomeTable ta = measure(pair.a, params);
  const OutcomeTable tb = measure(pair.b, params);
  const double h0 = prior_entropy();
  std::vector<FirstStageInfo> out;
  out.reserve(ta.outcomes.size());
  for (std::size_t i = 0; i < ta.outcomes.size(); ++i) {
    const Outcome& oa = ta.outcomes[i];
    const Outcome& ob = tb.outcomes[i];
    const Posterior post = bayes_update(oa.probability, ob.probability);
    out.push_back({oa.m, 0.5 * (oa.probability + ob.probability), post.a, post.b,
                   h0 - binary_entropy(post.a), oa.fidelity * post.a + ob.fidelity * post.b});
  }
  return out;
}

JointAnalysis analyze_joint(const HypothesisPair& pair, const MeasurementParams& params) {
  const JointTable ta = joint_measure(pair.a, params);
  const JointTable tb = joint_measure(pair.b, params);
  const double h0 = prior_entropy();
  JointAnalysis out;
  out.entries.reserve(ta.entries().size());
  for (std::size_t i = 0; i < ta.entries().size(); ++i) {
    const JointEntry& ea = ta.entries()[i];
    const JointEntry& eb = tb.entries()[i];
    const Posterior post = bayes_update(ea.probability, eb.probability);
    out.entries.push_back({ea.m, ea.mp, 0.5 * (ea.probability + eb.probability), post.a, post.b,
                           h0 - binary_entropy(post.a),
                           ea.fidelity * post.a + eb.fidelity * post.b});
  }
  const std::size_t n = multiplicity(params.j());
  for (std::size_t r = 0; r < n; ++r) {
    double pm = 0.0;
    for (std::size_t c = 0; c < n; ++c) pm += out.entries[r * n + c].probability;
    const HalfInt m = out.entries[r * n].m;
    if (pm < kSkipProbability) {
      out.skipped.push_back(m);
      continue;
    }
    double info = 0.0;
    double fid = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      const JointInfo& e = out.entries[r * n + c];
      info += e.probability / pm * e.information;
      fid += e.probability / pm * e.fidelity;
    }
    out.expectations.push_back({m, info, fid});
  }
  return out;
}

}  // namespace revspin

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

#include <vector>

#include "revspin/half_int.hpp"
#include "revspin/measure.hpp"
#include "revspin/spin_state.hpp"

namespace revspin {

/// Two orthogonal spin-1/2 hypotheses with equal priors:
///   |a> =  cos(gamma/2)|1/2> + sin(gamma/2)|-1/2>
///   |b> = -sin(gamma/2)|1/2> + cos(gamma/2)|-1/2>
struct HypothesisPair {
  double gamma;
  SpinState a;
  SpinState b;
};

/// Requires 0 < gamma < pi/2 (endpoints rejected).
HypothesisPair make_hypothesis_pair(double gamma);

/// Entropy in bits of the distribution (p, 1 - p), with 0 log 0 = 0.
double binary_entropy(double p);

/// Entropy of the equal prior; exactly one bit.
double prior_entropy();

/// Outcomes with p(m) below this are excluded from the expectations.
inline constexpr double kSkipProbability = 1e-15;

struct FirstStageInfo {
  HalfInt m;
  double probability;  // p(m)
  double posterior_a;  // p(a|m)
  double posterior_b;
  double information;  // bits
  double fidelity;     // F(m,a) p(a|m) + F(m,b) p(b|m)
};

std::vector<FirstStageInfo> analyze_first(const HypothesisPair& pair,
                                          const MeasurementParams& params);

struct JointInfo {
  HalfInt m;
  HalfInt mp;
  double probability;
  double posterior_a;
  double posterior_b;
  double information;
  double fidelity;
};

/// I'(m) and F'(m): averages over m' with weights p(m'|m).
struct ExpectedAfterReversal {
  HalfInt m;
  double information;
  double fidelity;
};

struct JointAnalysis {
  std::vector<JointInfo> entries;  // m = j..-j, then mp = j..-j
  std::vector<ExpectedAfterReversal> expectations;
  std::vector<HalfInt> skipped;
};

/// The reversing measurement is {T(pi - theta, pi - phi)}.
JointAnalysis analyze_joint(const HypothesisPair& pair, const MeasurementParams& params);

}  // namespace revspin

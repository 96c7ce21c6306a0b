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

#include <Eigen/Dense>

#include "revspin/half_int.hpp"
#include "revspin/spin_state.hpp"

namespace revspin {

/// Wigner small-d element <mp| exp(-i J_y theta) |m> from the finite k-sum.
/// Every term is assembled as sign * exp(log-magnitude) so that factorials
/// never overflow; zero powers of cos(theta/2) or sin(theta/2) count as one.
double wigner_small_d(HalfInt j, HalfInt mp, HalfInt m, double theta);

/// Dense d^{(j)}(theta); row and column i correspond to projection j - i.
class WignerMatrix {
 public:
  WignerMatrix(HalfInt j, double theta);

  HalfInt j() const noexcept { return j_; }
  double theta() const noexcept { return theta_; }
  double operator()(HalfInt mp, HalfInt m) const;
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }

 private:
  HalfInt j_;
  double theta_;
  Eigen::MatrixXd entries_;
};

/// exp(-i S_z phi) exp(-i S_y theta) applied to a state.
SpinState rotate_state(const SpinState& state, double theta, double phi);

}  // namespace revspin

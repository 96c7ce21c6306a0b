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

#include <complex>

namespace revspin {

/// ln(n!) for n >= 0; tabulated for small n, lgamma beyond.
double log_factorial(int n);

/// ln C(n, k); -inf when k is outside [0, n].
double log_binomial(int n, int k);

/// z^n by repeated squaring, n >= 0, with 0^0 = 1.
std::complex<double> ipow(std::complex<double> z, int n) noexcept;

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle) noexcept;

}  // namespace revspin

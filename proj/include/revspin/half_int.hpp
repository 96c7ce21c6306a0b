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

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace revspin {

/// Exact half-integer quantum number (spin j or s, projection m or sigma),
/// stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() noexcept = default;

  static constexpr HalfInt from_twice(int twice) noexcept {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt from_int(int n) noexcept { return from_twice(2 * n); }

  constexpr int twice() const noexcept { return twice_; }
  constexpr double value() const noexcept { return twice_ / 2.0; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

  constexpr HalfInt operator-() const noexcept { return from_twice(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) noexcept {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) noexcept {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  // "p/2" for odd twice values, plain integer otherwise.
  std::string to_string() const;

 private:
  int twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

/// Parses INT or INT"/2" (the fraction form only with an odd numerator).
/// Throws std::invalid_argument on malformed text.
HalfInt parse_half_int(std::string_view text);

/// True when m is one of j, j-1, ..., -j.
constexpr bool is_projection(HalfInt j, HalfInt m) noexcept {
  return j.twice() >= 0 && std::abs(m.twice()) <= j.twice() &&
         (j.twice() - m.twice()) % 2 == 0;
}

/// Number of projections, 2j+1.
constexpr std::size_t multiplicity(HalfInt j) noexcept {
  return static_cast<std::size_t>(j.twice() + 1);
}

/// Position of m in the descending lattice j, j-1, ..., -j.
constexpr std::size_t projection_index(HalfInt j, HalfInt m) noexcept {
  return static_cast<std::size_t>((j.twice() - m.twice()) / 2);
}

/// The lattice j, j-1, ..., -j.
std::vector<HalfInt> projections(HalfInt j);

/// Throws std::invalid_argument unless m is a projection of j.
void require_projection(HalfInt j, HalfInt m, const char* what);

/// (-1)^n for an integer-valued half-int; throws for half-odd n.
int parity_sign(HalfInt n);

/// exp(i*pi*x), exact for every half-integer x.
std::complex<double> exp_i_pi(HalfInt x) noexcept;

}  // namespace revspin

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

#include "revspin/half_int.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>
#include <string>

namespace revspin {

std::string HalfInt::to_string() const {
  if (is_integer()) {
    return std::to_string(twice_ / 2);
  }
  return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') {
    throw std::invalid_argument("half-integer: unexpected '+' in '" + std::string(whole) + "'");
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw std::invalid_argument("half-integer: malformed '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

HalfInt parse_half_int(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const int n = parse_int(text, text);
    if (n > std::numeric_limits<int>::max() / 2 || n < std::numeric_limits<int>::min() / 2) {
      throw std::invalid_argument("half-integer: out of range '" + std::string(text) + "'");
    }
    return HalfInt::from_int(n);
  }
  if (text.substr(slash + 1) != "2") {
    throw std::invalid_argument("half-integer: denominator must be 2 in '" + std::string(text) +
                                "'");
  }
  const int numerator = parse_int(text.substr(0, slash), text);
  if (numerator % 2 == 0) {
    throw std::invalid_argument("half-integer: even numerator written as a fraction '" +
                                std::string(text) + "'");
  }
  return HalfInt::from_twice(numerator);
}

std::vector<HalfInt> projections(HalfInt j) {
  if (j.twice() < 0) {
    throw std::invalid_argument("projections: negative spin " + j.to_string());
  }
  std::vector<HalfInt> out;
  out.reserve(multiplicity(j));
  for (int t = j.twice(); t >= -j.twice(); t -= 2) {
    out.push_back(HalfInt::from_twice(t));
  }
  return out;
}

void require_projection(HalfInt j, HalfInt m, const char* what) {
  if (!is_projection(j, m)) {
    throw std::invalid_argument(std::string(what) + ": " + m.to_string() +
                                " is not a projection of spin " + j.to_string());
  }
}

int parity_sign(HalfInt n) {
  if (!n.is_integer()) {
    throw std::invalid_argument("parity_sign: exponent " + n.to_string() + " is not an integer");
  }
  return (n.twice() / 2) % 2 == 0 ? 1 : -1;
}

std::complex<double> exp_i_pi(HalfInt x) noexcept {
  // exp(i*pi*t/2) cycles with period 4 in t.
  switch (((x.twice() % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

}  // namespace revspin

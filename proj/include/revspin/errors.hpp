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

#include <stdexcept>
#include <string>

namespace revspin {

// An admissibility condition (information, reversibility, weak coupling) does
// not hold for the requested operation.
class ConditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested quantity is numerically undefined: a vanishing probability,
// a singular distribution or a zero denominator.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace revspin

# Copyright 2026 The revspin Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reversible spin measurements."""

from ._core import (
    ConditionError,
    HalfInt,
    MeasurementParams,
    NumericalError,
    SpinState,
    asymptotic_recovery,
    average_fidelity,
    binary_entropy,
    cat_state,
    coefficient_a,
    coherent_x_state,
    joint_measure,
    measure,
    metrics,
    oracle_deviation,
    parse_angle,
    preset_metrics,
    preset_names,
    prior_entropy,
    projections,
    recovery_probability,
    recovery_width,
    reversibility_condition,
    rotate_state,
    subspace_prepare,
    weak_width,
    wigner_small_d,
)

__version__ = "0.1.0"

__all__ = [
    "ConditionError",
    "HalfInt",
    "MeasurementParams",
    "NumericalError",
    "SpinState",
    "asymptotic_recovery",
    "average_fidelity",
    "binary_entropy",
    "cat_state",
    "coefficient_a",
    "coherent_x_state",
    "joint_measure",
    "measure",
    "metrics",
    "oracle_deviation",
    "parse_angle",
    "preset_metrics",
    "preset_names",
    "prior_entropy",
    "projections",
    "recovery_probability",
    "recovery_width",
    "reversibility_condition",
    "rotate_state",
    "subspace_prepare",
    "weak_width",
    "wigner_small_d",
]

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

import math

import numpy as np
import pytest

import revspin


def fig_params(j=10):
    return revspin.MeasurementParams(j, math.pi / 6, math.pi / 6, 0.25)


def test_half_int_conversions():
    assert revspin.HalfInt("3/2").twice == 3
    assert revspin.HalfInt(2.5).twice == 5
    assert revspin.projections("1") == [1.0, 0.0, -1.0]
    with pytest.raises(ValueError):
        revspin.HalfInt(0.3)


def test_first_measurement():
    psi = revspin.SpinState.equal_superposition("1/2")
    rows = revspin.measure(psi, fig_params())
    assert len(rows) == 21
    assert sum(r["probability"] for r in rows) == pytest.approx(1.0, abs=1e-12)
    assert round(revspin.average_fidelity(psi, fig_params()), 2) == 0.57


def test_joint_measurement():
    psi = revspin.SpinState.equal_superposition("1/2")
    joint = revspin.joint_measure(psi, fig_params())
    p = np.asarray(joint["probability"])
    f = np.asarray(joint["fidelity"])
    assert p.shape == (21, 21)
    assert p.sum() == pytest.approx(1.0, abs=1e-12)
    # Anti-diagonal m' = -m recovers the state exactly.
    assert np.allclose(np.diag(np.fliplr(f)), 1.0, atol=1e-12)
    assert joint["q"] == pytest.approx(revspin.recovery_probability(fig_params()), abs=1e-12)
    assert round(joint["average_fidelity"], 2) == 0.93
    assert round(revspin.recovery_width(fig_params()), 1) == 2.3


def test_condition_error_is_raised():
    p = revspin.MeasurementParams(2, math.pi / 2, 0.0, 0.0)
    assert not revspin.reversibility_condition(p, "1/2")
    with pytest.raises(revspin.ConditionError):
        revspin.metrics("1/2", 2, 0.0, math.pi / 2, 0.0)
    ok = revspin.metrics("1/2", 10, 0.25, math.pi / 6, math.pi / 6)
    assert round(ok["q"], 2) == 0.13


def test_presets():
    assert "paper-3-1" in revspin.preset_names()
    m = revspin.preset_metrics("paper-4-2")
    assert round(m["q_prime"], 5) == 0.99992
    with pytest.raises(ValueError):
        revspin.preset_metrics("unknown")


def test_oracle_and_wigner():
    assert revspin.oracle_deviation(revspin.MeasurementParams(2, 0.7, -0.4, 0.3), "3/2") < 1e-10
    assert revspin.wigner_small_d(1, 0, 1, math.pi / 2) == pytest.approx(math.sqrt(0.5))


def test_angles_and_states():
    assert revspin.parse_angle("5pi/6") == 2.6179938779914944
    x = revspin.coherent_x_state(10)
    assert sum(x.weights()) == pytest.approx(1.0)
    prep = revspin.subspace_prepare(10, 10, 0.25, 0.0, 5)
    assert prep["peak"] == 4.0
    assert round(prep["probability"], 3) == 0.016

# Copyright 2026 The icmforge Authors
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


import numpy as np
import pytest

import icmforge as icm


def test_compact_t_counts_and_channel():
    t = icm.compact_t()
    assert icm.count(t).as_tuple() == (2, 2, 0, 0, 2)
    result = icm.channel_equiv(t, icm.target_unitary("t"))
    assert result.passed
    assert result.branches_per_input == 4
    assert [p for _, p, _ in result.branches] == pytest.approx([0.25] * 4, abs=1e-10)


def test_target_accepts_numpy_matrix():
    tdag = np.diag([1, np.exp(-1j * np.pi / 4)])
    assert icm.channel_equiv(icm.compact_t_dagger(), tdag)
    assert not icm.channel_equiv(icm.compact_t(), tdag)


def test_round_trip_text():
    c = icm.h_icm_gadget()
    assert icm.parse_circuit(str(c)) == c
    assert c.is_icm()


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        icm.parse_circuit("qubit a\ncnot a b\n")


def test_controlled_v_conversion():
    converted = icm.icm_convert(icm.controlled_v_decomposition())
    r = icm.count(converted)
    assert (r.ancillae, r.cnots, r.measurements) == (13, 16, 12)


def test_htn_and_time_optimal():
    r = icm.count(icm.build_htn(4))
    assert r.as_tuple() == (8, 4, 4, 2, 8)
    assert r.clifford_depth + r.measurement_depth == 8
    with pytest.raises(ValueError):
        icm.build_htn(0)
    circuit, layers, t_count = icm.time_optimal_transform(icm.parse_circuit("qubit q\ngate T q\noutput q\n"))
    assert t_count == 1
    assert icm.count(circuit).as_tuple() == (3, 3, 0, 0, 3)
    assert len(layers) == 2


def test_suite_and_cli():
    suite = icm.paper_reproduction_suite()
    assert [e["name"] for e in suite] == ["table1", "htn", "time-optimal", "cv-icm"]
    assert all(e["passed"] for e in suite)
    code, out, _ = icm.run_cli(["report", "--suite", "paper"])
    assert code == 0
    assert "cv-icm: 41 43 43 PASS" in out
    code, _, _ = icm.run_cli(["build-htn", "--n", "0"])
    assert code == 2


def test_compare_reports_na_for_zero_baseline():
    base = icm.legacy_t_counts()
    red = icm.compare(base, icm.count(icm.compact_t()))
    assert (red["ancillae"], red["cnots"], red["measurements"]) == (60, 67, 60)
    assert red["czs"] is None

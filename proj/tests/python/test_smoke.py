# Copyright 2026 The adistill Authors
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

"""Smoke tests for the Python bindings.

Reference values are computed here from first principles rather than taken
from the library under test.
"""

import itertools
import math

import pytest

import adistill


def test_pauli_products_and_phases():
    x, y, z = (adistill.PauliString(s) for s in "XYZ")
    assert str(x * z) == "-iY"
    assert str(x * y) == "+iZ"
    assert not x.commutes(z)
    assert adistill.PauliString("XXI").commutes(adistill.PauliString("ZZI"))
    assert adistill.PauliString("XIYZ").weight == 3


def test_builtin_codes_are_valid():
    names = adistill.builtin_code_names()
    assert {"513", "713", "913", "923", "933"} <= set(names)
    for name in names:
        ok, checks = adistill.validate_code(adistill.builtin_code(name))
        assert ok, checks


def _brute_force_counts(name):
    code = adistill.builtin_code(name)
    counts = [0] * (code.n + 1)
    for letters in itertools.product("IXYZ", repeat=code.n):
        e = adistill.PauliString("".join(letters))
        if adistill.is_corrected(name, e):
            counts[e.weight] += 1
    return counts


def test_five_qubit_code_polynomial_matches_enumeration():
    counts = _brute_force_counts("513")
    assert counts == adistill.corrected_by_weight("513")
    # A perfect distance-3 code corrects the identity and all 15 single-qubit errors.
    assert counts[:2] == [1, 15]


def test_qec_map_matches_polynomial():
    counts = adistill.corrected_by_weight("713")
    for f in (0.6, 0.9, 0.99):
        expected = sum(a * f ** (7 - w) * ((1 - f) / 3) ** w for w, a in enumerate(counts))
        assert adistill.qec_map("713", f) == pytest.approx(expected, abs=1e-14)


def test_pseudo_threshold_is_fixed_point():
    t = adistill.pseudo_threshold("933")
    assert adistill.qec_map("933", t) == pytest.approx(t, abs=1e-10)
    assert 0.9 < t < 1.0


def test_werner_and_swap():
    f = 0.9
    w = (4 * f - 1) / 3
    assert adistill.werner_from_fidelity(f) == pytest.approx(w)
    assert adistill.swap_fidelity([f, f]) == pytest.approx((1 + 3 * w * w) / 4)


def test_hashing_bound_root():
    root = adistill.HASHING_THRESHOLD_FIDELITY
    assert abs(adistill.distillable_entanglement(root)) < 1e-4


def test_bbpssw_step_closed_form():
    f = 0.7
    e = (1 - f) / 3
    dist, p_discard = adistill.purify_step("bbpssw", [f, e, e, e])
    success = f * f + 2 * f * e + 5 * e * e
    assert 1 - p_discard == pytest.approx(success)
    assert dist["p_i"] == pytest.approx((f * f + e * e) / success)


def test_circuit_oracle_agrees_with_map():
    for protocol in ("bbpssw", "dejmps"):
        start = [0.7, 0.05, 0.15, 0.1]
        a, pa = adistill.purify_step(protocol, start)
        b, pb = adistill.circuit_purify_step(protocol, start)
        assert pa == pytest.approx(pb, abs=1e-15)
        for key in a:
            assert a[key] == pytest.approx(b[key], abs=1e-15)


def test_purify_rounds_improve_fidelity():
    rows = adistill.purify_rounds("dejmps", 0.6, 4)
    assert [r["round"] for r in rows] == [1, 2, 3, 4]
    fidelities = [0.6] + [r["p_i"] for r in rows]
    assert all(b > a for a, b in zip(fidelities, fidelities[1:]))
    for r in rows:
        assert r["p_i"] + r["p_x"] + r["p_y"] + r["p_z"] == pytest.approx(1.0, abs=1e-12)


def test_chain_accounting():
    assert adistill.chain_rate("repeaters=1; rounds=skip,skip,skip") == (1, 2)
    f = 0.95
    plan = "repeaters=1; rounds=513,skip,skip"
    counts = adistill.corrected_by_weight("513")
    expected = sum(a * f ** (5 - w) * ((1 - f) / 3) ** w for w, a in enumerate(counts))
    w = (4 * expected - 1) / 3
    assert adistill.chain_fidelity(plan, f) == pytest.approx((1 + 3 * w * w) / 4, abs=1e-12)


def test_hybrid_and_convergence():
    r = adistill.hybrid(0.8)
    assert r["f_out"] > r["f_at_threshold"] >= adistill.pseudo_threshold("933") - 1e-12
    assert r["rate"] == pytest.approx(r["rate_1g"] * r["rate_2g"])
    steps, checks = adistill.converge("dejmps", [0.7, 0.1, 0.1, 0.1], 40)
    assert steps[-1][0] == pytest.approx(1.0, abs=1e-9)
    assert all(passed for _, passed, _ in checks)


def test_errors_raise():
    with pytest.raises(ValueError):
        adistill.PauliString("XQ")
    with pytest.raises(Exception):
        adistill.qec_map("no-such-code", 0.9)
    with pytest.raises(ValueError):
        adistill.converge("bbpssw", [0.4, 0.2, 0.2, 0.2], 10)

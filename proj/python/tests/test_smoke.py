# Copyright 2026 The sft-tensor Authors
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
from fractions import Fraction

import pytest

import sft_tensor as st

NOT_ON_ZERO = "([[0 1][1 0]] * [[1][0]])"
ROT35_ON_ZERO = "([[3/5 4/5][-4/5 3/5]] * [[1][0]])"


def test_evaluate_not():
    assert st.evaluate(NOT_ON_ZERO) == [["0"], ["1"]]


def test_render_round_trip():
    text = st.render_formula("( [[1 0][0 1]] # [[1][0]] )")
    assert st.render_formula(text) == text


def test_validate_report():
    report = st.validate(NOT_ON_ZERO)
    assert report["order"] == (2, 1)
    assert report["osl"] and report["sum_free"]


def test_paper_mode_trivial():
    report = st.validate("([[1 0] * ", mode="paper")
    assert report["order"] == (1, 1)
    assert st.evaluate("([[1 0] * ", mode="paper") == [["0"]]


def test_strict_mode_rejects():
    with pytest.raises(st.SftError):
        st.evaluate("([[1 0] * ")


def test_sft_rot35():
    verdict = st.decide_sft(ROT35_ON_ZERO, k=1)
    assert Fraction(verdict["value"]) == Fraction(16, 25)
    assert verdict["accept"]
    assert verdict["in_promise_band"] is None


def test_sft_promise_band():
    verdict = st.decide_sft("[[1/2][1/2][1/2][1/2]]", k=2, variant="promise")
    assert verdict["value"] == "1/2"
    assert not verdict["accept"]
    assert verdict["in_promise_band"]


def test_stride_permutation():
    p = st.as_fractions(st.stride_permutation(2, 2))
    assert p == [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]


def test_compile_formula_then_simulate():
    text = "[[3/5][0][4/5]]"
    array = st.compile_formula(text)
    out = st.simulate(array)
    assert out["state"] == [["3/5"], ["0"], ["4/5"], ["0"]]


def test_compile_circuit_matches_simulation():
    array = "width 2\nlevel\ngate cnot 1 2\nlevel\ngate not 1\ninput basis 10\n"
    formula = st.compile_circuit(array)
    assert st.evaluate(formula) == st.simulate(array)["state"]


def test_cap_exceeded():
    with pytest.raises(st.CapExceededError):
        st.evaluate("([[1 0][0 1]] # [[1 0][0 1]])", max_entries=8)


def test_pow2_ceil():
    assert [st.pow2_ceil(n) for n in (1, 5, 8)] == [1, 8, 8]

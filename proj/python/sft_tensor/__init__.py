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
"""Exact tensor formulas over semirings."""

from fractions import Fraction

from ._core import (
    CapExceededError,
    InvalidArgumentError,
    ParseError,
    SftError,
    ValidationError,
    compile_circuit,
    compile_formula,
    decide_sft,
    evaluate,
    pad_formula,
    pow2_ceil,
    render_formula,
    simulate,
    stride_permutation,
    validate,
)


def as_fractions(rows):
    """Real-valued token rows as Fractions."""
    return [[Fraction(tok) for tok in row] for row in rows]


__all__ = [
    "CapExceededError",
    "InvalidArgumentError",
    "ParseError",
    "SftError",
    "ValidationError",
    "as_fractions",
    "compile_circuit",
    "compile_formula",
    "decide_sft",
    "evaluate",
    "pad_formula",
    "pow2_ceil",
    "render_formula",
    "simulate",
    "stride_permutation",
    "validate",
]

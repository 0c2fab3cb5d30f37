# ========= Copyright 2024 @ Perioda Authors. All Rights Reserved. =========
# Licensed under the Apache License, Version 2.0 (the “License”);
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an “AS IS” BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ========= Copyright 2024 @ Perioda Authors. All Rights Reserved. =========
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from perioda.errors import InputError
from perioda.utils import (
    format_fraction,
    get_thread_count,
    is_multiplicatively_independent,
    lcm_all,
    ordered_map,
    parse_fraction,
    prime_to_part,
    proportionality,
    solve_exponent_pair,
    solve_power,
    valuation,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1/3", Fraction(1, 3)),
        ("-2/4", Fraction(-1, 2)),
        (" 7 ", Fraction(7)),
        (5, Fraction(5)),
        (Fraction(2, 3), Fraction(2, 3)),
    ],
)
def test_parse_fraction(text, expected):
    assert parse_fraction(text) == expected


@pytest.mark.parametrize("bad", [0.5, True, "1/0", "1/-2", "a/b", None])
def test_parse_fraction_rejects_inexact_and_malformed(bad):
    with pytest.raises(InputError):
        parse_fraction(bad)


def test_format_fraction_reduces():
    assert format_fraction(Fraction(6, 4)) == "3/2"
    assert format_fraction(Fraction(-3)) == "-3/1"


def test_valuation_and_prime_to_part():
    assert valuation(12, 2) == 2
    assert valuation(-45, 3) == 2
    assert valuation(7, 5) == 0
    assert prime_to_part(-60, [2, 5]) == -3
    with pytest.raises(InputError):
        valuation(0, 2)


@pytest.mark.parametrize(
    "p, q, independent",
    [(2, 3, True), (4, 8, False), (6, 12, True), (9, 27, False), (2, 6, True)],
)
def test_is_multiplicatively_independent(p, q, independent):
    assert is_multiplicatively_independent(p, q) is independent


def test_is_multiplicatively_independent_rejects_small_values():
    with pytest.raises(InputError):
        is_multiplicatively_independent(1, 3)


def test_solve_power():
    assert solve_power(2, Fraction(8)) == 3
    assert solve_power(3, Fraction(1, 9)) == -2
    assert solve_power(5, Fraction(1)) == 0
    assert solve_power(2, Fraction(6)) is None
    assert solve_power(2, Fraction(-4)) is None


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_solve_exponent_pair_recovers_exponents(n, m):
    ratio = Fraction(2) ** n / Fraction(3) ** m
    assert solve_exponent_pair(2, 3, ratio) == (n, m)


def test_solve_exponent_pair_without_solution():
    assert solve_exponent_pair(2, 3, Fraction(5)) is None
    assert solve_exponent_pair(4, 6, Fraction(2)) is None
    with pytest.raises(InputError):
        solve_exponent_pair(2, 4, Fraction(8))


def test_proportionality():
    one, two = Fraction(1), Fraction(2)
    assert proportionality([two, 0], [one, 0]) == 2
    assert proportionality([two, one], [one, one]) is None
    assert proportionality([one, 0], [0, one]) is None


def test_lcm_all():
    assert lcm_all([]) == 1
    assert lcm_all([4, 6, 10]) == 60


def test_get_thread_count(monkeypatch):
    monkeypatch.delenv("PERIODA_THREADS", raising=False)
    assert get_thread_count() == 1
    monkeypatch.setenv("PERIODA_THREADS", "4")
    assert get_thread_count() == 4
    monkeypatch.setenv("PERIODA_THREADS", "many")
    assert get_thread_count() == 1


@pytest.mark.parametrize("threads", ["1", "3"])
def test_ordered_map_keeps_input_order(monkeypatch, threads):
    monkeypatch.setenv("PERIODA_THREADS", threads)
    assert ordered_map(lambda x: x * x, list(range(20))) == [
        x * x for x in range(20)
    ]

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

from perioda.configs import WindowConfig
from perioda.errors import InputError
from perioda.lattices import Lattice, Point, Scalar
from perioda.sparse import (
    DilationDifferenceFn,
    QuasiPeriodicFn,
    counterexample_function,
    dilate_diff,
    dilation_orbit,
    equal_on_cosets,
    equal_on_window,
    support_cosets,
    telescope,
    translate,
    unboundedness_profile,
)

Z = Lattice.standard(1)


def test_telescope_inverts_the_dilation_difference():
    g = QuasiPeriodicFn(Z, {Point.of("1/3"): 1, Point.of("2/3"): -2})
    f = telescope(g, 2)
    assert dilate_diff(f, 2) is g
    assert equal_on_window(
        DilationDifferenceFn(f, 2), g, WindowConfig(bound=2, den_cap=6)
    )


def test_telescope_stops_on_alpha_points():
    s = Point((Scalar(0, 1),))
    g = QuasiPeriodicFn(Z, {s: 1})
    f = telescope(g, 3)
    assert f(s.scale(27)) == 1
    assert f.stop_index(s.scale(27)) == 3
    assert f(s) == 0


def test_telescope_rejects_summands_on_the_lattice():
    with pytest.raises(InputError):
        telescope(QuasiPeriodicFn(Z, {Point.of(0): 1}), 2)
    with pytest.raises(InputError):
        telescope(QuasiPeriodicFn(Z, {}, zero_value=1), 2)


@pytest.mark.parametrize("P", [2, 3, 6, 10])
def test_counterexample_profile_grows_linearly(P):
    assert unboundedness_profile(P, 8) == list(range(1, 9))


def test_counterexample_is_not_periodic():
    g, f = counterexample_function(2)
    assert g.is_periodic_under(Z)
    report = equal_on_window(f, translate(f, Point.of(1)), WindowConfig())
    assert not report.equal
    assert report.witness is not None
    a, b = report.values
    assert f(report.witness) == a
    assert f(report.witness + Point.of(1)) == b
    with pytest.raises(InputError):
        counterexample_function(6, denominator=3)


def test_dilation_orbit():
    orbit = dilation_orbit(Z, Point.of("1/5"), 2)
    assert orbit == {
        Point.of("1/5"),
        Point.of("2/5"),
        Point.of("3/5"),
        Point.of("4/5"),
    }
    with pytest.raises(InputError):
        dilation_orbit(Z, Point((Scalar(0, 1),)), 2)


def test_support_cosets_contain_the_support():
    e = QuasiPeriodicFn(
        Z, {Point.of("1/5"): 1, Point((Scalar("1/2", 1),)): 2}
    )
    support = support_cosets(dilate_diff(e, 2), dilate_diff(e, 3), 2, 3)
    assert set(e.support) <= set(support)


def test_support_cosets_reject_dependent_dilations():
    e = QuasiPeriodicFn(Z, {Point.of("1/5"): 1})
    with pytest.raises(InputError):
        support_cosets(dilate_diff(e, 2), dilate_diff(e, 4), 2, 4)


def test_equal_on_cosets_reports_the_first_difference():
    f = QuasiPeriodicFn(Z, {Point.of("1/2"): 1, Point.of("1/3"): 1})
    assert equal_on_cosets(f, f.over(Lattice.standard(1, 3)))
    h = QuasiPeriodicFn(Z, {Point.of("1/2"): 1, Point.of("1/3"): 2})
    report = equal_on_cosets(f, h)
    assert not report
    assert report.witness == Point.of("1/3")
    assert report.values == (Fraction(1), Fraction(2))
    report = equal_on_cosets(f, f.with_zero_value(4))
    assert report.witness == Point.of(0)
    assert report.to_dict()["values"] == ["0/1", "4/1"]

from __future__ import annotations

from math import comb

import pytest

from src.errors import ShapeError
from src.pbwcheck import (
    check_J1,
    check_J2,
    graded_dims_A,
    hilbert,
    koszul_overlap_lemma_check,
    lie_deformation,
    pbw_verify,
    random_lie_bracket,
)
from src.pbwcheck.deformation import DeformationData
from src.tensorspace import antisymmetrizer
from src.utils.settings import get_settings
from src.wedgedef import clifford_deformation


@pytest.mark.parametrize("name", ["so3", "sl2"])
def test_lie_algebras_are_pbw(mock, name):
    report = pbw_verify(mock(name), maxdeg=6)
    assert report.verdict == "pass"
    assert report.J1.verdict == "pass"
    assert report.J2.verdict == "pass"
    assert report.dims.filtered_U == [comb(d + 3, 3) for d in range(7)]
    assert report.dims.first_failure is None


def test_failing_bracket_fails_J2(mock):
    report = pbw_verify(mock("failing_bracket"), maxdeg=3)
    assert report.verdict == "fail"
    assert report.J2.levels[0].verdict == "fail"


def test_counterexample_passes_conditions_but_fails_dims(mock):
    report = pbw_verify(mock("counterexample"), maxdeg=6)
    assert report.J1.verdict == "pass"
    assert report.J2.verdict == "pass"
    assert report.dims.verdict == "fail"
    assert report.dims.graded_A == [1, 3, 3, 1, 1, 1, 1]
    assert report.dims.first_failure == 3
    assert report.verdict == "fail"


def test_clifford_mock_matches_constructor(mock):
    data = mock("clifford")
    built = clifford_deformation([[1, 0], [0, 1]])
    assert data.R.includes(built.R) and built.R.includes(data.R)
    assert pbw_verify(data, maxdeg=4).verdict == "pass"


def test_type_e_graded_dims(mock):
    data = mock("type_e_undeformed")
    assert graded_dims_A(data.R, 5) == [1, 2, 4, 6, 9, 12]


def test_type_e_deformed_conditions_hold(mock):
    data = mock("type_e_deformed")
    assert data.dim_R == 2
    j1 = check_J1(data)
    assert j1.passed
    assert all(level.passed for level in check_J2(data, j1))


def test_type_e_deformed_dims_do_not_fail(mock):
    report = pbw_verify(mock("type_e_deformed"), maxdeg=4)
    assert report.J1.verdict == "pass"
    assert report.dims.verdict != "fail"


def test_symbolic_alpha_gives_equations(mock):
    data = mock("type_e_symbolic")
    assert data.symbolic
    report = pbw_verify(data)
    assert report.symbolic
    assert report.verdict != "pass"
    assert report.dims is None
    assert report.J1.verdict == "fail"
    assert report.J1.equations


def test_hilbert_rows_are_aligned(mock):
    report = hilbert(mock("type_e_undeformed"), maxdeg=5)
    assert report.rows["A"] == [1, 2, 4, 6, 9, 12]
    assert report.rows["cumulative_A"] == [1, 3, 7, 13, 22, 34]
    assert report.rows["U"] == report.rows["cumulative_A"]
    assert report.verdict == "pass"


def test_hilbert_of_exterior_relations():
    data = DeformationData(v=3, N=2, relations=antisymmetrizer(3, 2).basis())
    report = hilbert(data, maxdeg=4)
    assert report.rows["A"] == [1, 3, 6, 10, 15]


def test_dependent_relations_are_rejected():
    with pytest.raises(ShapeError):
        DeformationData(v=2, N=2, relations=[{(0, 1): 1}, {(0, 1): 2}])


def test_koszul_overlap_lemma_for_wedge():
    R = antisymmetrizer(4, 3)
    assert koszul_overlap_lemma_check(R, 2)


def test_random_lie_brackets_are_pbw(rng):
    for _ in range(3):
        data = lie_deformation(random_lie_bracket(4, rng))
        j1 = check_J1(data)
        assert j1.passed
        assert all(level.passed for level in check_J2(data, j1))


@pytest.mark.slow
def test_random_lie_brackets_dimension_oracle(rng):
    for _ in range(get_settings().random_runs):
        report = pbw_verify(lie_deformation(random_lie_bracket(4, rng)), maxdeg=4)
        assert report.verdict == "pass"
        assert report.dims.filtered_U == [comb(d + 4, 4) for d in range(5)]

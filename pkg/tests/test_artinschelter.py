from __future__ import annotations

import pytest

from src.artinschelter import (
    compare_with_reference,
    family_data,
    family_tags,
    solve_all,
    solve_family,
    specialize,
    staged_solve,
    verify_table,
)
from src.artinschelter.families import PARAMETERS
from src.cli.io import dump_report
from src.errors import InputError
from src.pbwcheck import check_J1, check_J2, pbw_verify


def nonzero(vec: dict) -> dict:
    return {w: c for w, c in vec.items() if c}


@pytest.mark.parametrize("tag", ["E", "A", "S1", "S1_alpha1", "S1_alpha1_aMinus2", "S2", "S2_plus1",
                                 "S2_minus1", "S2prime"])
def test_family_data_parses(tag):
    fam = family_data(tag)
    assert fam.tag == tag
    assert set(fam.relations) == {"f", "g"}
    assert fam.w


def test_unknown_family_is_input_error():
    with pytest.raises(InputError) as info:
        family_data("Z")
    assert info.value.path == "family"


def test_catalog_lists_every_branch():
    assert {"E", "H", "A", "S1", "S2", "S2prime"} <= set(family_tags())


# ---------- type E ----------

def test_type_e_table_matches_reference():
    report = solve_family("E")
    assert report.verdict == "pass"
    assert report.table_verified
    assert sorted(report.free) == ["a11", "a21", "a3", "gamma"]
    assert report.comparison.verdict == "pass"
    assert report.comparison.mismatches == []


def test_type_e_specialization_matches_document(mock):
    fam = family_data("E")
    table = staged_solve(fam)
    data = specialize(fam, table, {"gamma": 1})
    expected = mock("type_e_deformed")
    for i in (1, 2, 3):
        for j in (0, 1):
            assert nonzero(data.alpha_map(i).image(j)) == nonzero(expected.alpha_map(i).image(j)), (i, j)


def test_type_e_specialization_is_pbw():
    fam = family_data("E")
    data = specialize(fam, staged_solve(fam), {"gamma": 2, "a11": 1, "a21": -1, "a3": 3})
    j1 = check_J1(data)
    assert j1.passed
    assert all(level.passed for level in check_J2(data, j1))


def test_specialize_rejects_unknown_names():
    fam = family_data("E")
    with pytest.raises(InputError):
        specialize(fam, staged_solve(fam), {"delta": 1})


def test_specialize_needs_family_parameters():
    fam = family_data("S2")
    with pytest.raises(InputError) as info:
        specialize(fam, staged_solve(fam), {"gamma": 1})
    assert info.value.path == "values"


# ---------- other families ----------

@pytest.mark.parametrize("tag", ["A", "S1", "S1_alpha1", "S2", "S2_plus1", "S2_minus1", "S2prime"])
def test_family_agrees_with_reference(tag):
    fam = family_data(tag)
    table = staged_solve(fam)
    assert verify_table(fam, table)
    comparison = compare_with_reference(tag, table, fam)
    assert comparison.verdict == "pass", comparison.mismatches


def test_a_minus_two_branch_reports_missing_condition():
    report = solve_family("S1_alpha1_aMinus2")
    assert report.verdict == "warning"
    statuses = {r.relation: r.status for r in report.comparison.relations}
    assert statuses["beta^2*a21 - gamma^2*b22"] == "derived"
    assert "unmatched" not in statuses.values()
    assert len(report.comparison.extra_conditions) == 1
    extra = report.comparison.extra_conditions[0]
    assert "a11" in extra and "b11" in extra


@pytest.mark.slow
def test_type_h_table_matches_reference():
    report = solve_family("H")
    assert report.verdict == "pass"
    assert report.stage4_residual == []
    assert sorted(report.free) == ["beta", "gamma"]


@pytest.mark.slow
def test_solve_all_families():
    reports = solve_all(family_tags())
    assert set(reports) == set(family_tags())
    assert all(r.verdict != "fail" for r in reports.values())
    assert all(r.table_verified for r in reports.values())


# ---------- golden tables ----------

GOLDEN_TAGS = ["E", pytest.param("H", marks=pytest.mark.slow), "A", "S1", "S1_alpha1", "S1_alpha1_aMinus2",
               "S2", "S2_plus1", "S2_minus1", "S2prime"]


@pytest.mark.parametrize("tag", GOLDEN_TAGS)
def test_solved_table_matches_golden_file(tag, golden):
    golden(f"as_{tag}.json", dump_report(solve_family(tag)))


# ---------- PBW through degree 6 ----------

@pytest.mark.slow
def test_deformed_type_e_is_pbw_through_degree_6(mock):
    report = pbw_verify(mock("type_e_deformed"), maxdeg=6)
    assert report.verdict == "pass"


@pytest.mark.slow
def test_type_a_with_random_free_values_is_pbw_through_degree_6(rng):
    fam = family_data("A")
    table = staged_solve(fam)
    constrained = {name for condition in table.side_conditions for name in condition.variables()}
    values = {name: int(rng.integers(-3, 4)) for name in table.free
              if name not in constrained and name not in PARAMETERS}
    values.update(fam.sample)
    data = specialize(fam, table, values)
    report = pbw_verify(data, maxdeg=6)
    assert report.verdict == "pass", report

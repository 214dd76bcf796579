from __future__ import annotations

import pytest

import src.yoneda.structure as structure_module
from src.errors import J1Error, ShapeError
from src.exactmath import parse_scalar
from src.pbwcheck.deformation import DeformationData
from src.tensorspace.words import all_words
from src.yoneda import ainf_check, b_to_dual_degree, build_koszul_dual, sign_conflicts, sign_table


def test_sign_table():
    assert sign_table(3) == {0: -1, 1: -1, 2: 1, 3: 1}
    assert sign_table(2) == {0: -1, 1: -1, 2: 1}
    assert sign_conflicts(sign_table(2)) == [0, 2]
    assert sign_conflicts(sign_table(3)) == [0, 1, 2, 3]
    with pytest.raises(ShapeError):
        sign_table(1)


def test_b_degrees():
    assert [b_to_dual_degree(k, 3) for k in range(5)] == [0, 1, 3, 4, 6]
    assert [b_to_dual_degree(k, 2) for k in range(5)] == [0, 1, 2, 3, 4]


def test_type_e_koszul_dual_dims(mock):
    algebra = build_koszul_dual(mock("type_e_undeformed").R, 4)
    assert algebra.dual_dims() == [1, 2, 4, 2, 1]
    assert algebra.b_dims()[:4] == [1, 2, 2, 1]


def test_degbound_must_reach_overlaps(mock):
    with pytest.raises(ShapeError):
        build_koszul_dual(mock("type_e_undeformed").R, 3)


def images_of(data: DeformationData) -> dict[int, list[dict]]:
    return {i: [dict(data.alpha_map(i).image(j)) for j in range(data.dim_R)] for i in range(1, data.N + 1)}


def perturbed_type_e(mock) -> DeformationData:
    """type E with alpha_1(f) = yy, off the one-parameter line where J1 holds."""
    base = mock("type_e_deformed")
    F = base.field_spec
    images = images_of(base)
    images[1][0] = {(1, 1): parse_scalar("1", F)}
    return DeformationData.from_images(2, 3, base.relations, images, field_=F)


def perturb_one_entry(base: DeformationData, rng) -> DeformationData:
    """Add a small nonzero integer to one coefficient of alpha_1 or alpha_2."""
    F = base.field_spec
    images = images_of(base)
    i = int(rng.integers(1, 3))
    j = int(rng.integers(0, base.dim_R))
    words = list(all_words(base.v, base.N - i))
    word = words[int(rng.integers(0, len(words)))]
    delta = F.coerce(int(rng.choice([-2, -1, 1, 2])))
    value = images[i][j].get(word, F.zero()) + delta
    if value:
        images[i][j][word] = value
    else:
        images[i][j].pop(word, None)
    return DeformationData.from_images(base.v, base.N, base.relations, images, field_=F)


def test_strict_check_refuses_failing_J1(mock):
    with pytest.raises(J1Error):
        ainf_check(perturbed_type_e(mock), degbound=6, strict=True)


@pytest.mark.slow
def test_skipped_descent_checks_are_reported(mock, monkeypatch):
    monkeypatch.setattr(structure_module, "DESCENT_SAMPLE_LIMIT", 4)
    report = ainf_check(mock("type_e_undeformed"), degbound=6)
    skipped = [w for w in report.warnings if "skipped" in w]
    assert skipped
    assert report.verdict == "warning"


@pytest.mark.slow
def test_undeformed_type_e_is_ainf(mock):
    report = ainf_check(mock("type_e_undeformed"), degbound=8)
    assert report.verdict == "pass"
    assert report.roundtrip == "pass"
    assert report.curvature == "pass"
    assert not any("skipped" in w for w in report.warnings)


@pytest.mark.slow
def test_deformed_type_e_is_ainf(mock):
    report = ainf_check(mock("type_e_deformed"), degbound=8)
    assert report.verdict == "pass"
    assert report.descent == []
    assert all(entry.agree for entry in report.dictionary)


@pytest.mark.slow
def test_perturbed_type_e_is_not_ainf(mock):
    report = ainf_check(perturbed_type_e(mock), degbound=6)
    assert report.verdict != "pass"
    j1_entries = [e for e in report.dictionary if e.condition == "J1"]
    assert j1_entries and j1_entries[0].condition_verdict == "fail"


@pytest.mark.slow
def test_axioms_pair_with_conditions_on_random_perturbations(mock, rng):
    base = mock("type_e_deformed")
    failing = 0
    for _ in range(10):
        report = ainf_check(perturb_one_entry(base, rng), degbound=6)
        assert all(entry.agree for entry in report.dictionary), report.dictionary
        if any(entry.condition_verdict == "fail" for entry in report.dictionary):
            assert report.verdict == "fail"
            failing += 1
    assert failing >= 1

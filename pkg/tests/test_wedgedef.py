from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from pydantic import ValidationError

from src.cli.io import read_json
from src.errors import DimensionHypothesisError, GeneralizedJacobiError, JacobiError, ShapeError
from src.exactmath import get_field
from src.pbwcheck import check_J1, check_J2, pbw_verify
from src.pbwcheck.deformation import DeformationData
from src.tensorspace import ExteriorMap, TensorProduct, alternating_word_map
from src.tensorspace.exterior import gen_jacobi_map, jacobi_map
from src.utils.paths import get_mocks_dir
from src.utils.settings import get_settings
from src.wedgedef import (
    EvenNData,
    FormDoc,
    OddNData,
    bracket_map,
    build_alpha_even,
    build_alpha_odd,
    dimension_gate,
    gen_jacobi_check,
    heisenberg_example,
    jacobi_check,
    random_odd_data,
    symmetric_rows,
    verify_symmetric_relations,
    wedge_relations,
)


def read_json_mock(name: str):
    return read_json(get_mocks_dir() / "algebras" / f"{name}.json")


def conditions_hold(data) -> bool:
    j1 = check_J1(data)
    return j1.passed and all(level.passed for level in check_J2(data, j1))


# ---------- dimension gate ----------

def test_dimension_gate():
    assert dimension_gate(5, 3) == []
    assert dimension_gate(2, 2) == []
    with pytest.raises(DimensionHypothesisError):
        dimension_gate(4, 3)
    with pytest.raises(DimensionHypothesisError):
        dimension_gate(4, 3, allow_small_v=True)
    with pytest.raises(DimensionHypothesisError):
        dimension_gate(3, 3)
    with pytest.raises(DimensionHypothesisError):
        dimension_gate(2, 3, allow_small_v=True)
    assert len(dimension_gate(3, 3, allow_small_v=True)) == 1


def test_parity_is_validated():
    with pytest.raises(ValidationError):
        OddNData(v=5, N=4)
    with pytest.raises(ValidationError):
        EvenNData(v=6, N=3)
    with pytest.raises(ValidationError):
        OddNData(v=5, N=3, forms=[FormDoc(degree=4, coefficients={"xyzt": 1})])


# ---------- odd N ----------

def test_random_odd_construction_satisfies_conditions(rng):
    data = build_alpha_odd(random_odd_data(5, 3, rng))
    assert data.N == 3 and data.dim_R == 10
    assert conditions_hold(data)


def test_random_odd_construction_is_reproducible():
    first = random_odd_data(5, 3, np.random.default_rng(7))
    second = random_odd_data(5, 3, np.random.default_rng(7))
    assert first == second


def test_odd_mock_passes_verify():
    doc = OddNData.model_validate(read_json_mock("wedge_odd"))
    report = pbw_verify(build_alpha_odd(doc), maxdeg=3, margin=1)
    assert report.J1.verdict == "pass"
    assert report.J2.verdict == "pass"
    assert report.dims.verdict != "fail"


def test_odd_without_data_is_undeformed():
    data = build_alpha_odd(OddNData(v=5, N=3))
    assert all(data.alpha_map(i).is_zero() for i in range(1, 4))
    assert data.augmented


def test_alpha_2_off_the_form_family_fails_conditions(rng):
    relations = wedge_relations(5, 3)
    images = {2: []}
    for _ in relations:
        img = {(k,): Fraction(int(rng.integers(-2, 3))) for k in range(5)}
        images[2].append({w: c for w, c in img.items() if c})
    data = DeformationData.from_images(5, 3, relations, images)
    assert not data.alpha_map(2).is_zero()
    assert not conditions_hold(data)


@pytest.mark.slow
def test_random_odd_constructions_pass_verify(rng):
    for _ in range(get_settings().random_runs):
        report = pbw_verify(build_alpha_odd(random_odd_data(5, 3, rng)), maxdeg=3, margin=2)
        assert report.J1.verdict == "pass"
        assert report.J2.verdict == "pass"
        assert report.dims.verdict != "fail"


# ---------- even N ----------

def test_heisenberg_satisfies_conditions():
    data = build_alpha_even(heisenberg_example())
    assert not data.alpha_map(1).is_zero()
    assert conditions_hold(data)


def test_heisenberg_mock_matches_example():
    doc = EvenNData.model_validate(read_json_mock("wedge_even_heisenberg"))
    assert doc.L == {"xy": {"z": "1"}}
    assert conditions_hold(build_alpha_even(doc))


def test_abelian_even_construction():
    doc = EvenNData.model_validate(read_json_mock("wedge_even_abelian"))
    data = build_alpha_even(doc)
    assert data.alpha_map(1).is_zero()
    assert not data.alpha_map(2).is_zero()
    assert conditions_hold(data)


def test_zero_bracket_even_construction_is_undeformed():
    data = build_alpha_even(EvenNData(v=6, N=4))
    assert all(data.alpha_map(i).is_zero() for i in range(1, 5))
    assert conditions_hold(data)


def test_non_jacobi_bracket_is_refused():
    doc = EvenNData.model_validate(read_json_mock("wedge_even_nonjacobi"))
    with pytest.raises(JacobiError):
        build_alpha_even(doc)


def test_generalized_jacobi_failure_is_refused():
    # L(u ^ v) = t, Phi_2(z ^ t) = 1 and L(x ^ y) = z leave a nonzero term on x^y^z^u^v
    doc = EvenNData(v=6, N=4, L={"xy": {"z": 1}, "uv": {"t": 1}},
                    forms=[FormDoc(degree=2, coefficients={"zt": 1})])
    with pytest.raises(GeneralizedJacobiError) as info:
        build_alpha_even(doc)
    assert info.value.degree == 2


SO3_ON_SIX = {"xy": {"z": 1}, "xz": {"y": -1}, "yz": {"x": 1}}


def test_alpha_1_without_forms_is_underline_of_bracket():
    data = build_alpha_even(EvenNData(v=6, N=4, L=SO3_ON_SIX))
    L_op = alternating_word_map(bracket_map(SO3_ON_SIX, 6, data.field_spec))
    expected = TensorProduct([L_op, 2]) + TensorProduct([2, L_op])
    for j, r in enumerate(data.relations):
        got = {w: c for w, c in data.alpha_map(1).image(j).items() if c}
        assert got == {w: c for w, c in expected.apply(r).items() if c}, j


def test_unit_form_gives_the_jacobi_identity():
    one = ExteriorMap.scalar_one(6)
    for coeffs in (SO3_ON_SIX, read_json_mock("wedge_even_nonjacobi")["L"]):
        L = bracket_map(coeffs, 6, get_field(1))
        assert gen_jacobi_map(L, one).flat() == jacobi_map(L).flat()
        assert gen_jacobi_check(L, one) == jacobi_check(L)
    assert jacobi_check(bracket_map(SO3_ON_SIX, 6, get_field(1)))
    assert not jacobi_check(bracket_map(read_json_mock("wedge_even_nonjacobi")["L"], 6, get_field(1)))


def test_so3_as_quadratic_wedge_deformation():
    doc = EvenNData(v=3, N=2, L={"xy": {"z": 1}, "xz": {"y": -1}, "yz": {"x": 1}})
    report = pbw_verify(build_alpha_even(doc), maxdeg=4)
    assert report.verdict == "pass"


def test_small_v_needs_override():
    with pytest.raises(DimensionHypothesisError):
        build_alpha_odd(OddNData(v=3, N=3))
    data = build_alpha_odd(OddNData(v=3, N=3, allow_small_v=True))
    assert data.dim_R == 1


# ---------- symmetric relations ----------

def test_symmetric_relations_need_symmetric_R():
    rows = symmetric_rows(2, 2)
    data = DeformationData.from_images(2, 2, rows, {2: [{(): Fraction(1)}, {}, {(): Fraction(1)}]})
    assert verify_symmetric_relations(data, maxdeg=4).verdict == "pass"


def test_symmetric_check_rejects_exterior_relations():
    data = DeformationData(v=3, N=2, relations=wedge_relations(3, 2))
    with pytest.raises(ShapeError):
        verify_symmetric_relations(data)

"""
PBW verification: J1 and J2 plus a direct comparison of dim F^d U with
sum_(i <= d) dim A_i, assembled into a CheckReport.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import Optional

import numpy as np

from src.errors import ShapeError
from src.models import (
    CheckReport,
    DimsSection,
    HilbertReport,
    J1Section,
    J2LevelReport,
    J2Section,
    combine_verdicts,
)
from src.pbwcheck.conditions import J1Result, J2Level, check_J1, check_J2, overlap_space
from src.pbwcheck.deformation import DeformationData
from src.pbwcheck.dimensions import cumulative, filtered_dims_U, graded_dims_A
from src.tensorspace.exterior import ExteriorMap
from src.tensorspace.subspace import (
    Subspace,
    alternating_row,
    subspace_intersect,
    subspace_sum,
    tensor_subspace,
)
from src.tensorspace.words import format_coeff, vec_to_pairs
from src.utils.settings import get_settings


# ---------- report sections ----------

def _j1_section(j1: J1Result, dim_R: int) -> J1Section:
    equations = []
    if j1.symbolic:
        for rem in j1.residuals:
            equations.extend(str(c) for _, c in sorted(rem.items()))
    return J1Section(
        verdict="pass" if j1.passed else "fail",
        coordinates=[[format_coeff(c.get(k, 0)) for k in range(dim_R)] for c in j1.coords],
        residuals=[vec_to_pairs(r) for r in j1.residuals],
        equations=equations,
    )


def _j2_section(levels: list[J2Level]) -> J2Section:
    reports = [
        J2LevelReport(i=lv.i, verdict="pass" if lv.passed else "fail",
                      residuals=[vec_to_pairs(r) for r in lv.residuals])
        for lv in levels
    ]
    return J2Section(verdict=combine_verdicts([r.verdict for r in reports]), levels=reports)


def compare_dims(graded: list[int], filtered: list[int], stable: bool) -> tuple[str, Optional[int]]:
    """A count below the cumulative A row is a genuine failure; a count above it means the truncation is short."""
    cum = cumulative(graded)
    below = next((d for d, (u, a) in enumerate(zip(filtered, cum)) if u < a), None)
    if below is not None:
        return "fail", below
    above = next((d for d, (u, a) in enumerate(zip(filtered, cum)) if u > a), None)
    if above is not None or not stable:
        return "warning", above
    return "pass", None


def dims_section(data: DeformationData, maxdeg: int, margin: int) -> tuple[DimsSection, list[str]]:
    graded = graded_dims_A(data.R, maxdeg)
    filt = filtered_dims_U(data, maxdeg, margin)
    verdict, failure = compare_dims(graded, filt.dims, filt.stable)
    section = DimsSection(
        verdict=verdict, maxdeg=maxdeg, margin=margin, graded_A=graded,
        cumulative_A=cumulative(graded), filtered_U=filt.dims, first_failure=failure,
        stable=filt.stable, rows={str(k): v for k, v in filt.rows.items()},
    )
    return section, filt.warnings


# ---------- entry points ----------

def pbw_verify(data: DeformationData, maxdeg: Optional[int] = None, margin: Optional[int] = None) -> CheckReport:
    settings = get_settings()
    maxdeg = settings.maxdeg if maxdeg is None else maxdeg
    margin = settings.default_margin(data.N) if margin is None else margin
    W = overlap_space(data.R)
    logging.info(f"Verifying N={data.N}, v={data.v}: dim R = {data.dim_R}, dim overlap = {W.dim}")
    j1 = check_J1(data, W)
    levels = check_J2(data, j1, W)
    warnings: list[str] = []
    dims = None
    if data.symbolic:
        warnings.append("alpha has free parameters; the dimension comparison needs numeric data and was skipped")
    else:
        dims, dim_warnings = dims_section(data, maxdeg, margin)
        warnings.extend(dim_warnings)
    J1 = _j1_section(j1, data.dim_R)
    J2 = _j2_section(levels)
    parts = [J1.verdict, J2.verdict] + ([dims.verdict] if dims else ["warning"])
    return CheckReport(
        verdict=combine_verdicts(parts), N=data.N, v=data.v, dim_R=data.dim_R, dim_overlap=W.dim,
        symbolic=data.symbolic, J1=J1, J2=J2, dims=dims, warnings=warnings,
    )


def hilbert(data: DeformationData, maxdeg: Optional[int] = None, margin: Optional[int] = None) -> HilbertReport:
    settings = get_settings()
    maxdeg = settings.maxdeg if maxdeg is None else maxdeg
    margin = settings.default_margin(data.N) if margin is None else margin
    section, warnings = dims_section(data, maxdeg, margin)
    unstable = {} if section.stable else section.rows
    return HilbertReport(
        verdict=section.verdict, maxdeg=maxdeg, margin=margin,
        rows={"A": section.graded_A, "cumulative_A": section.cumulative_A, "U": section.filtered_U},
        unstable_rows=unstable, first_failure=section.first_failure, warnings=warnings,
    )


def koszul_overlap_lemma_check(R: Subspace, m: int) -> bool:
    """W^(m-1) S W inside W^m S + n_i W^(m-i) S W^i, tested on orthogonal complements.

    With S = R^perp the inclusion is equivalent to
    (V^m R) n (sum_i V^(m-i) R V^i) inside V^(m-1) R V.
    """
    if not 2 <= m <= R.degree - 1:
        raise ShapeError(f"m must lie in 2..N-1, got m={m} for N={R.degree}")
    total = tensor_subspace(R, m - 1, 1)
    for i in range(2, m + 1):
        total = subspace_sum(total, tensor_subspace(R, m - i, i))
    lhs = subspace_intersect(tensor_subspace(R, m, 0), total)
    return tensor_subspace(R, m - 1, 1).includes(lhs)


# ---------- random Lie algebras ----------

def _so3(offset: int) -> dict:
    x, y, z = offset, offset + 1, offset + 2
    return {(x, y): {(z,): Fraction(1)}, (x, z): {(y,): Fraction(-1)}, (y, z): {(x,): Fraction(1)}}


def random_lie_bracket(v: int, rng: np.random.Generator) -> ExteriorMap:
    """Either k e_0 acting on an abelian ideal by a random matrix, or so(3) plus such a piece."""
    images: dict = {}
    start = 0
    if v >= 3 and rng.integers(0, 2):
        images.update(_so3(0))
        start = 3
    if v - start >= 2:
        e0 = start
        for i in range(start + 1, v):
            img = {}
            for k in range(start + 1, v):
                c = int(rng.integers(-2, 3))
                if c:
                    img[(k,)] = Fraction(c)
            if img:
                images[(e0, i)] = img
    return ExteriorMap(v, 2, 1, images)


def lie_deformation(L: ExteriorMap) -> DeformationData:
    """R = wedge^2 V with alpha_1(x_i x_j - x_j x_i) = L(e_i ^ e_j)."""
    pairs = list(combinations(range(L.v), 2))
    relations = [alternating_row(P) for P in pairs]
    images = {1: [L.image(P) for P in pairs]}
    return DeformationData.from_images(L.v, 2, relations, images)

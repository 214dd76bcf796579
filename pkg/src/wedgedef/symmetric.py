"""
Deformations of T(V)/(S^N V): verification only, no construction from forms.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from src.errors import ShapeError
from src.models import CheckReport
from src.pbwcheck.deformation import DeformationData
from src.pbwcheck.verify import pbw_verify
from src.tensorspace.subspace import symmetrizer


def verify_symmetric_relations(data: DeformationData, maxdeg: Optional[int] = None,
                               margin: Optional[int] = None) -> CheckReport:
    S = symmetrizer(data.v, data.N)
    if not (S.includes(data.R) and data.R.includes(S)):
        raise ShapeError(f"R is not S^{data.N} V for v = {data.v}")
    return pbw_verify(data, maxdeg=maxdeg, margin=margin)


def symmetric_rows(v: int, N: int) -> list[dict]:
    """One symmetrized row per multiset of N letters, in combinations_with_replacement order."""
    rows = symmetrizer(v, N).echelon.rows
    return [dict(rows[M]) for M in combinations_with_replacement(range(v), N)]


def clifford_deformation(b: Sequence[Sequence]) -> DeformationData:
    """x_i x_j + x_j x_i + b(x_i, x_j) for i < j and x_i x_i + b(x_i, x_i)."""
    v = len(b)
    if any(len(row) != v for row in b):
        raise ShapeError("the bilinear form must be a square matrix")
    if any(b[i][j] != b[j][i] for i in range(v) for j in range(v)):
        raise ShapeError("the bilinear form must be symmetric")
    rows = symmetric_rows(v, 2)
    images = {2: [{(): Fraction(b[i][j])} if b[i][j] else {} for i, j in combinations_with_replacement(range(v), 2)]}
    return DeformationData.from_images(v, 2, rows, images)

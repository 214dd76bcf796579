"""
The two conditions on alpha_1..alpha_N, evaluated on a basis w_1..w_m of the
overlap space (V (x) R) n (R (x) V):

    J1: [1, alpha_1](w_j) lies in R,
    J2: alpha_i([1, alpha_1](w_j)) = [1, alpha_(i+1)](w_j) for i = 1..N, alpha_(N+1) = 0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from src.exactmath.linear import combine
from src.pbwcheck.deformation import DeformationData
from src.tensorspace.linmap import bracket_vector
from src.tensorspace.subspace import Subspace, subspace_intersect, tensor_subspace


def overlap_space(R: Subspace) -> Subspace:
    return subspace_intersect(tensor_subspace(R, 1, 0), tensor_subspace(R, 0, 1))


@dataclass
class J1Result:
    """coords[j] are the R-coordinates of [1, alpha_1](w_j); residuals[j] is what lies outside R."""

    coords: list[dict] = field(default_factory=list)
    residuals: list[dict] = field(default_factory=list)
    symbolic: bool = False

    @property
    def passed(self) -> bool:
        return not any(self.residuals)


@dataclass
class J2Level:
    i: int
    residuals: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(self.residuals)


def check_J1(data: DeformationData, overlap: Optional[Subspace] = None) -> J1Result:
    W = overlap if overlap is not None else overlap_space(data.R)
    alpha1 = data.alpha_map(1)
    result = J1Result(symbolic=data.symbolic)
    for w in W.basis():
        coords, rem = data.R.echelon.split_coordinates(bracket_vector(alpha1, data.R, w))
        result.coords.append(coords)
        result.residuals.append(rem)
    if not result.passed:
        logging.warning(f"J1 fails on {sum(1 for r in result.residuals if r)} of {W.dim} overlap vectors")
    return result


def check_J2(data: DeformationData, j1: Optional[J1Result] = None,
             overlap: Optional[Subspace] = None) -> list[J2Level]:
    W = overlap if overlap is not None else overlap_space(data.R)
    if j1 is None:
        j1 = check_J1(data, W)
    basis = W.basis()
    levels = []
    for i in range(1, data.N + 1):
        alpha_i = data.alpha_map(i)
        level = J2Level(i=i)
        for j, w in enumerate(basis):
            lhs = alpha_i.apply(j1.coords[j])
            rhs = bracket_vector(data.alpha_map(i + 1), data.R, w) if i < data.N else {}
            level.residuals.append(combine([(Fraction(1), lhs), (Fraction(-1), rhs)]))
        if not level.passed:
            logging.warning(f"J2 fails at i={i}")
        levels.append(level)
    return levels

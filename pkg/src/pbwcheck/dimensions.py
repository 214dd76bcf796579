"""
Hilbert functions: dim A_d from a homogeneous Groebner basis, and
dim F^d U from a truncated Groebner basis of (P).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import accumulate

from src.pbwcheck.deformation import DeformationData
from src.pbwcheck.groebner import NCGroebner
from src.tensorspace.subspace import Subspace


def graded_dims_A(R: Subspace, maxdeg: int) -> list[int]:
    """dim A_d for d = 0..maxdeg; homogeneous truncation at maxdeg is exact."""
    gb = NCGroebner(R.v, R.basis(), maxdeg)
    return [gb.count_normal(d) for d in range(maxdeg + 1)]


@dataclass
class FilteredDims:
    """dims is the row that was returned; rows holds every truncation that was computed."""

    dims: list[int]
    truncation: int
    rows: dict[int, list[int]] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def stable(self) -> bool:
        return len({tuple(r) for r in self.rows.values()}) <= 1


def _cumulative_normal(gb: NCGroebner, maxdeg: int) -> list[int]:
    return list(accumulate(gb.count_normal(d) for d in range(maxdeg + 1)))


def filtered_dims_U(data: DeformationData, maxdeg: int, margin: int) -> FilteredDims:
    """dim F^d U for d = 0..maxdeg with a stability recheck one degree higher."""
    D = maxdeg + margin
    gb = NCGroebner(data.v, data.numeric_tails(), D)
    first = _cumulative_normal(gb, maxdeg)
    gb.extend(D + 1)
    second = _cumulative_normal(gb, maxdeg)
    result = FilteredDims(dims=second, truncation=D + 1, rows={D: first, D + 1: second})
    if first != second:
        msg = f"filtered dimensions change between truncation {D} ({first}) and {D + 1} ({second})"
        logging.warning(msg)
        result.warnings.append(msg)
    return result


def cumulative(dims: list[int]) -> list[int]:
    return list(accumulate(dims))


def first_failure(filtered: list[int], graded: list[int]) -> int | None:
    """Smallest d with dim F^d U != sum_(i <= d) dim A_i."""
    for d, (u, a) in enumerate(zip(filtered, cumulative(graded))):
        if u != a:
            return d
    return None

"""
Exact sparse linear algebra.

Vectors are dicts from comparable keys to exact scalars (Fraction,
FieldElement or PolyElement). Echelon keeps a fully reduced row echelon
form: each row's pivot is its smallest key, with coefficient 1, and no other
row has a nonzero entry at that pivot.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Hashable, Iterable, Optional, Sequence

from src.errors import FieldDivisionError, NonlinearityError, ShapeError
from src.exactmath.polynomial import PolyElement

Vec = dict


def add_scaled(target: dict, source: dict, scale) -> None:
    """target += scale * source, in place, dropping zeros."""
    if not scale:
        return
    for k, c in source.items():
        nc = target.get(k, 0) + scale * c
        if nc:
            target[k] = nc
        else:
            target.pop(k, None)


def scaled(vec: dict, scale) -> dict:
    if not scale:
        return {}
    out = {}
    for k, c in vec.items():
        v = c * scale
        if v:
            out[k] = v
    return out


def combine(terms: Iterable[tuple[Any, dict]]) -> dict:
    """Sum of scale * vec over (scale, vec) pairs."""
    out: dict = {}
    for scale, vec in terms:
        add_scaled(out, vec, scale)
    return out


def _inverse(c):
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


class Echelon:
    """Incremental reduced row echelon form with optional transform tracking."""

    def __init__(self, track: bool = False):
        self.rows: dict[Hashable, dict] = {}
        self.track = track
        self.transforms: dict[Hashable, dict] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        return sorted(self.rows)

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]

    def decompose(self, vec: dict) -> tuple[dict, dict]:
        """Split vec into (coefficients per pivot, remainder)."""
        rem = dict(vec)
        coeffs = {}
        for p in [k for k in rem if k in self.rows]:
            c = rem.get(p)
            if c:
                coeffs[p] = c
                add_scaled(rem, self.rows[p], -c)
        return coeffs, rem

    def reduce(self, vec: dict) -> dict:
        return self.decompose(vec)[1]

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: dict, tag: Hashable = None) -> bool:
        """Add vec to the row space; returns False if it was dependent."""
        coeffs, rem = self.decompose(vec)
        if not rem:
            return False
        pivot = min(rem)
        inv = _inverse(rem[pivot])
        row = scaled(rem, inv)
        transform = None
        if self.track:
            transform = {tag: inv}
            for p, c in coeffs.items():
                add_scaled(transform, self.transforms[p], -c * inv)
        for p, other in self.rows.items():
            c = other.get(pivot)
            if c:
                add_scaled(other, row, -c)
                if self.track:
                    add_scaled(self.transforms[p], transform, -c)
        self.rows[pivot] = row
        if self.track:
            self.transforms[pivot] = transform
        return True

    def coordinates(self, vec: dict) -> Optional[dict]:
        """Coefficients of vec in the inserted generators, or None if outside."""
        if not self.track:
            raise ShapeError("coordinates need a tracking echelon")
        coeffs, rem = self.decompose(vec)
        if rem:
            return None
        return combine((c, self.transforms[p]) for p, c in coeffs.items())

    def split_coordinates(self, vec: dict) -> tuple[dict, dict]:
        """Generator coordinates of the projection plus the remainder."""
        coeffs, rem = self.decompose(vec)
        return combine((c, self.transforms[p]) for p, c in coeffs.items()), rem

    @classmethod
    def from_vectors(cls, vectors: Iterable[dict], track: bool = False) -> "Echelon":
        ech = cls(track=track)
        for i, v in enumerate(vectors):
            ech.insert(v, tag=i)
        return ech

    def copy(self) -> "Echelon":
        other = Echelon(track=self.track)
        other.rows = {p: dict(r) for p, r in self.rows.items()}
        other.transforms = {p: dict(t) for p, t in self.transforms.items()}
        return other


def rank_of(vectors: Iterable[dict]) -> int:
    return Echelon.from_vectors(vectors).rank


def intersect(first: Sequence[dict], second: Sequence[dict]) -> list[dict]:
    """Basis of span(first) and span(second) intersected (Zassenhaus)."""
    ech = Echelon()
    for u in first:
        row = {(0, k): c for k, c in u.items()}
        row.update({(1, k): c for k, c in u.items()})
        ech.insert(row)
    for w in second:
        ech.insert({(0, k): c for k, c in w.items()})
    out = []
    for pivot in ech.pivots():
        if pivot[0] == 1:
            out.append({k: c for (tag, k), c in ech.rows[pivot].items()})
    return out


def kernel(images: Sequence[dict]) -> list[dict[int, Any]]:
    """Kernel of the map e_j -> images[j], as coefficient vectors over j."""
    ech = Echelon()
    for j, img in enumerate(images):
        row = {(0, k): c for k, c in img.items()}
        row[(1, j)] = Fraction(1)
        ech.insert(row)
    out = []
    for pivot in ech.pivots():
        if pivot[0] == 1:
            out.append({j: c for (tag, j), c in ech.rows[pivot].items()})
    return out


def invert_matrix(matrix: Sequence[Sequence]) -> list[list]:
    """Inverse of a square matrix over an exact field."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ShapeError("matrix is not square")
    ech = Echelon(track=True)
    for i, row in enumerate(matrix):
        ech.insert({j: c for j, c in enumerate(row) if c}, tag=i)
    if ech.rank != n:
        raise FieldDivisionError("matrix is singular")
    # rows of the RREF are unit vectors e_j = sum_i T[j][i] * row_i
    inverse = [[0] * n for _ in range(n)]
    for j in range(n):
        for i, c in ech.transforms[j].items():
            inverse[j][i] = c
    return inverse


# ---------- affine systems over rational functions ----------

def linear_extract(eqs: Sequence, unknowns: Sequence[str]) -> tuple[list[list[PolyElement]], list[PolyElement]]:
    """Write eqs as M*u - c with coefficients in the remaining parameters."""
    matrix: list[list[PolyElement]] = []
    rhs: list[PolyElement] = []
    for index, eq in enumerate(eqs):
        if not isinstance(eq, PolyElement):
            if eq:
                raise ShapeError("linear_extract needs PolyElement equations")
            continue
        if not eq:
            continue
        ring = eq.ring
        positions = [ring.index(u) for u in unknowns]
        den_vars = {ring.names[i] for e in eq.den for i, k in enumerate(e) if k}
        for u in unknowns:
            if u in den_vars:
                raise NonlinearityError(index, u, eq)
        row_nums: list[dict] = [dict() for _ in unknowns]
        const_num: dict = {}
        for e, c in eq.num.items():
            hits = [(j, e[p]) for j, p in enumerate(positions) if e[p]]
            degree = sum(k for _, k in hits)
            if degree >= 2:
                raise NonlinearityError(index, unknowns[hits[0][0]], eq)
            if degree == 1:
                j = hits[0][0]
                stripped = list(e)
                stripped[positions[j]] = 0
                row_nums[j][tuple(stripped)] = c
            else:
                const_num[e] = -c
        matrix.append([PolyElement(ring, num, eq.den) for num in row_nums])
        rhs.append(PolyElement(ring, const_num, eq.den))
    return matrix, rhs


@dataclass
class AffineSolution:
    """Pivot unknowns as expressions in the free unknowns and parameters."""

    values: dict[str, PolyElement]
    free: list[str]
    residuals: list[PolyElement] = field(default_factory=list)


def solve_affine(matrix: list[list[PolyElement]], rhs: list[PolyElement], unknowns: Sequence[str]) -> AffineSolution:
    """Leftmost-pivot Gauss-Jordan elimination; zero rows yield residuals."""
    rows = [list(r) + [c] for r, c in zip(matrix, rhs)]
    n = len(unknowns)
    rank = 0
    pivot_cols: list[int] = []
    for col in range(n):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [x / lead if x else x for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b if b else a for a, b in zip(rows[r], rows[rank])]
        pivot_cols.append(col)
        rank += 1
    free = [unknowns[j] for j in range(n) if j not in pivot_cols]
    values: dict[str, PolyElement] = {}
    for r, col in enumerate(pivot_cols):
        expr = rows[r][n]
        for j in range(n):
            if j != col and rows[r][j]:
                expr = expr - rows[r][j] * expr.ring.gen(unknowns[j])
        values[unknowns[col]] = expr
    residuals = [rows[r][n] for r in range(rank, len(rows)) if rows[r][n]]
    return AffineSolution(values=values, free=free, residuals=residuals)

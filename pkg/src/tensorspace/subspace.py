"""
Numeric subspaces of one graded piece V^(x)d.

A Subspace is an Echelon plus its home (v, d). Rows are fully reduced with
pivot = smallest word, so two Subspaces are equal iff their rows are.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from typing import Iterable, Sequence

from src.errors import ShapeError, SymbolicSubspaceError
from src.exactmath.linear import Echelon, intersect
from src.exactmath.polynomial import PolyElement
from src.tensorspace.words import GradedPiece, TensorElement, all_words


@dataclass
class Subspace:
    v: int
    degree: int
    echelon: Echelon

    @property
    def dim(self) -> int:
        return self.echelon.rank

    def basis(self) -> list[dict]:
        return self.echelon.basis()

    def contains(self, vec: dict) -> bool:
        return self.echelon.contains(vec)

    def reduce(self, vec: dict) -> dict:
        return self.echelon.reduce(vec)

    def coordinates(self, vec: dict):
        return self.echelon.coordinates(vec)

    def includes(self, other: "Subspace") -> bool:
        _same_home(self, other)
        return all(self.contains(b) for b in other.basis())

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.v, self.degree) == (other.v, other.degree) and self.echelon.rows == other.echelon.rows

    def __repr__(self):
        return f"Subspace(v={self.v}, degree={self.degree}, dim={self.dim})"


def _same_home(U: Subspace, W: Subspace) -> None:
    if (U.v, U.degree) != (W.v, W.degree):
        raise ShapeError(f"subspaces live in different pieces: (v={U.v}, d={U.degree}) vs (v={W.v}, d={W.degree})")


def _numeric(vec: dict) -> dict:
    out = {}
    for w, c in vec.items():
        if isinstance(c, PolyElement):
            if not c.is_constant:
                raise SymbolicSubspaceError(f"coefficient {c} of word {w} is symbolic")
            c = c.constant_value()
        out[w] = c
    return out


def subspace_from_vectors(vectors: Iterable, v: int, degree: int | None = None, track: bool = False) -> Subspace:
    """Echelonize vectors (dicts or TensorElements); with track, coordinates refer to input order."""
    ech = Echelon(track=track)
    for i, vec in enumerate(vectors):
        if isinstance(vec, TensorElement):
            if vec.v != v:
                raise ShapeError(f"tensor element over dim V = {vec.v}, expected {v}")
            vec = vec.terms
        for w in vec:
            if degree is None:
                degree = len(w)
            if len(w) != degree:
                raise ShapeError(f"mixed degrees: word {w} in a subspace of degree {degree}")
            if any(i >= v or i < 0 for i in w):
                raise ShapeError(f"word {w} has a letter outside dim V = {v}")
        ech.insert(_numeric(vec), tag=i)
    if degree is None:
        raise ShapeError("cannot infer the degree of a subspace from zero vectors")
    GradedPiece(v, degree)
    return Subspace(v, degree, ech)


def zero_subspace(v: int, degree: int) -> Subspace:
    return Subspace(v, degree, Echelon())


def full_subspace(v: int, degree: int) -> Subspace:
    piece = GradedPiece(v, degree)
    ech = Echelon()
    for w in piece.words():
        ech.rows[w] = {w: Fraction(1)}
    return Subspace(v, degree, ech)


def subspace_intersect(U: Subspace, W: Subspace) -> Subspace:
    _same_home(U, W)
    return Subspace(U.v, U.degree, Echelon.from_vectors(intersect(U.basis(), W.basis())))


def subspace_sum(U: Subspace, W: Subspace) -> Subspace:
    _same_home(U, W)
    ech = U.echelon.copy()
    ech.track = False
    for b in W.basis():
        ech.insert(b)
    return Subspace(U.v, U.degree, ech)


def tensor_subspace(U: Subspace, d_left: int, d_right: int) -> Subspace:
    """V^(x)d_left (x) U (x) V^(x)d_right."""
    if d_left < 0 or d_right < 0:
        raise ShapeError("tensor padding must be non-negative")
    if d_left == d_right == 0:
        return U
    GradedPiece(U.v, U.degree + d_left + d_right)
    # padding a reduced basis keeps it reduced, with pivots a + p + c
    ech = Echelon()
    lefts = list(all_words(U.v, d_left))
    rights = list(all_words(U.v, d_right))
    for a in lefts:
        for c in rights:
            for p, row in U.echelon.rows.items():
                ech.rows[a + p + c] = {a + w + c: coeff for w, coeff in row.items()}
    return Subspace(U.v, U.degree + d_left + d_right, ech)


# ---------- antisymmetrizer and symmetrizer ----------

def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting seq (distinct entries)."""
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def alternating_row(index: Sequence[int]) -> dict:
    """Sum over sigma of sgn(sigma) x_(I sigma) for an increasing tuple I."""
    return {perm: Fraction(permutation_sign(perm)) for perm in permutations(index)}


def antisymmetrizer(v: int, N: int) -> Subspace:
    """Image of wedge^N V in V^(x)N; rows are indexed by increasing tuples."""
    GradedPiece(v, N)
    ech = Echelon()
    for index in combinations(range(v), N):
        ech.rows[index] = alternating_row(index)
    return Subspace(v, N, ech)


def symmetrizer(v: int, N: int) -> Subspace:
    GradedPiece(v, N)
    ech = Echelon()
    for multiset in combinations_with_replacement(range(v), N):
        ech.rows[multiset] = {perm: Fraction(1) for perm in set(permutations(multiset))}
    return Subspace(v, N, ech)


# ---------- orthogonal complement ----------

def pair(dual: dict, vec: dict):
    """The word pairing <w_I, x_J> = delta_IJ, extended bilinearly."""
    if len(dual) > len(vec):
        dual, vec = vec, dual
    total = 0
    for w, c in dual.items():
        d = vec.get(w)
        if d:
            total = total + c * d
    return total


def perp_space(R: Subspace) -> Subspace:
    """S = R^perp in W^(x)N, one row per non-pivot word of R."""
    piece = GradedPiece(R.v, R.degree)
    rows = R.echelon.rows
    ech = Echelon()
    for u in piece.words():
        if u in rows:
            continue
        row = {u: Fraction(1)}
        for p, r in rows.items():
            c = r.get(u)
            if c:
                row[p] = -c
        ech.insert(row)
    return Subspace(R.v, R.degree, ech)

"""
Maps between exterior powers, on increasing index tuples.

An ExteriorMap sends e_P (P increasing, |P| = p) to a combination of e_R
with |R| = r. Forms have r = 0 and land on the empty tuple.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional

from src.errors import ShapeError
from src.exactmath.linear import add_scaled
from src.tensorspace.linmap import WordMap
from src.tensorspace.subspace import permutation_sign

Index = tuple[int, ...]


def is_increasing(index: Index) -> bool:
    return all(a < b for a, b in zip(index, index[1:]))


def wedge(A: Index, B: Index) -> Optional[tuple[int, Index]]:
    """e_A ^ e_B = sign * e_sorted, or None when A and B overlap."""
    if set(A) & set(B):
        return None
    merged = A + B
    return permutation_sign(merged), tuple(sorted(merged))


def exterior_basis(v: int, p: int) -> Iterator[Index]:
    return combinations(range(v), p)


@dataclass
class ExteriorMap:
    v: int
    p: int
    r: int
    images: dict = field(default_factory=dict)

    def __post_init__(self):
        for P, img in self.images.items():
            if len(P) != self.p or not is_increasing(P) or any(i >= self.v for i in P):
                raise ShapeError(f"{P} is not an increasing {self.p}-subset of {self.v} letters")
            for R in img:
                if len(R) != self.r or not is_increasing(R) or any(i >= self.v for i in R):
                    raise ShapeError(f"image index {R} is not an increasing {self.r}-subset")
        self.images = {P: dict(img) for P, img in self.images.items() if img}

    def image(self, P: Index) -> dict:
        return self.images.get(P, {})

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for P, c in vec.items():
            add_scaled(out, self.image(P), c)
        return out

    def compose(self, inner: "ExteriorMap") -> "ExteriorMap":
        """self after inner."""
        if inner.r != self.p or inner.v != self.v:
            raise ShapeError(f"cannot compose wedge^{inner.p} -> wedge^{inner.r} with wedge^{self.p} -> wedge^{self.r}")
        return ExteriorMap(self.v, inner.p, self.r, {P: self.apply(img) for P, img in inner.images.items()})

    def is_zero(self) -> bool:
        return not self.images

    def flat(self) -> dict:
        """Coordinates {(P, R): c} in the basis phi_(P,R)."""
        return {(P, R): c for P, img in self.images.items() for R, c in img.items()}

    def first_nonzero(self) -> Optional[tuple[Index, dict]]:
        for P in sorted(self.images):
            return P, self.images[P]
        return None

    @classmethod
    def unit(cls, v: int, P: Index, R: Index) -> "ExteriorMap":
        """phi_(P,R): e_P -> e_R, every other basis element -> 0."""
        return cls(v, len(P), len(R), {P: {R: Fraction(1)}})

    @classmethod
    def scalar_one(cls, v: int) -> "ExteriorMap":
        """Phi_0 = 1."""
        return cls(v, 0, 0, {(): {(): Fraction(1)}})


def op_Ta(phi: ExteriorMap, a: int) -> ExteriorMap:
    """T_a(phi)(e_I) = sum over I = A u P of sgn(P A) e_A ^ phi(e_P)."""
    if a < 0:
        raise ShapeError("T_a needs a >= 0")
    images = {}
    for I in exterior_basis(phi.v, a + phi.p):
        out: dict = {}
        for P in combinations(I, phi.p):
            img = phi.image(P)
            if not img:
                continue
            A = tuple(i for i in I if i not in P)
            sign = permutation_sign(P + A)
            for R, c in img.items():
                w = wedge(A, R)
                if w is not None:
                    add_scaled(out, {w[1]: c}, sign * w[0])
        if out:
            images[I] = out
    return ExteriorMap(phi.v, a + phi.p, a + phi.r, images)


# ---------- identities for brackets and forms ----------

def jacobi_map(L: ExteriorMap) -> ExteriorMap:
    """L o T_1(L) on wedge^3; zero iff L satisfies the Jacobi identity."""
    _check_bracket(L)
    return L.compose(op_Ta(L, 1))


def gen_jacobi_map(L: ExteriorMap, phi: ExteriorMap) -> ExteriorMap:
    """L o T_2(Phi) o T_(2r+1)(L) on wedge^(2r+3)."""
    _check_bracket(L)
    if phi.r != 0 or phi.p % 2:
        raise ShapeError(f"expected an even form, got wedge^{phi.p} -> wedge^{phi.r}")
    inner = op_Ta(L, phi.p + 1)
    middle = op_Ta(phi, 2)
    return L.compose(middle.compose(inner))


def top_form_map(L: ExteriorMap, phi_top: ExteriorMap) -> ExteriorMap:
    """Phi_2n o T_(2n-1)(L) on wedge^(2n+1)."""
    _check_bracket(L)
    if phi_top.r != 0:
        raise ShapeError("the top map must be a scalar form")
    return phi_top.compose(op_Ta(L, phi_top.p - 1))


def _check_bracket(L: ExteriorMap) -> None:
    if (L.p, L.r) != (2, 1):
        raise ShapeError(f"a bracket maps wedge^2 -> V, got wedge^{L.p} -> wedge^{L.r}")


# ---------- tensor realizations ----------

def alternating_word_map(phi: ExteriorMap) -> WordMap:
    """phi as an alternating map V^(x)p -> V^(x)r (r <= 1); zero on repeated letters."""
    if phi.r > 1:
        raise ShapeError("only maps into V or k are realized on words")

    def fn(word):
        if len(set(word)) < len(word):
            return {}
        sign = permutation_sign(word)
        img = phi.image(tuple(sorted(word)))
        return {R: sign * c for R, c in img.items()}

    return WordMap(fn, phi.p, phi.r)

"""
The Koszul dual A^! = T(W)/(S), S = R^perp, and the Yoneda algebra B with
B_2p = A^!_(Np) and B_2p+1 = A^!_(Np+1).

Elements of A^! are vectors over W-words (the same integer letters as V,
printed in upper case) kept in normal form for a homogeneous Groebner
basis of S.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import cached_property
from typing import Optional

from src.errors import ShapeError
from src.exactmath.linear import invert_matrix
from src.pbwcheck.conditions import overlap_space
from src.pbwcheck.groebner import NCGroebner
from src.tensorspace.subspace import Subspace, perp_space
from src.tensorspace.words import Word, concat


def b_to_dual_degree(k: int, N: int) -> int:
    """Word degree in A^! of the piece B_k."""
    return N * (k // 2) + (k % 2)


class YonedaAlgebra:
    def __init__(self, R: Subspace, degbound: int, relations: Optional[list[dict]] = None):
        if degbound < R.degree + 1:
            raise ShapeError(f"degbound {degbound} does not reach B_3 = A^!_{R.degree + 1}")
        self.v = R.v
        self.N = R.degree
        self.R = R
        self.relations = [dict(r) for r in relations] if relations is not None else R.basis()
        self.degbound = degbound
        self.S = perp_space(R)
        self.gb = NCGroebner(self.v, self.S.basis(), degbound)
        self._normal: dict[int, list[Word]] = {}
        logging.info(f"Koszul dual: dim S = {self.S.dim}, Groebner basis with {len(self.gb.basis)} elements "
                     f"up to degree {degbound}")

    # ---------- graded pieces ----------

    def normal_words(self, degree: int) -> list[Word]:
        if degree > self.degbound:
            raise ShapeError(f"A^! is only known up to degree {self.degbound}")
        if degree not in self._normal:
            self._normal[degree] = list(self.gb.normal_words(degree))
        return self._normal[degree]

    def dual_dims(self) -> list[int]:
        return [self.gb.count_normal(d) for d in range(self.degbound + 1)]

    def b_dims(self) -> list[int]:
        """dim B_k for every k whose A^! degree is within the bound."""
        out = []
        k = 0
        while b_to_dual_degree(k, self.N) <= self.degbound:
            out.append(self.gb.count_normal(b_to_dual_degree(k, self.N)))
            k += 1
        return out

    def odd_degrees(self, limit: int) -> list[int]:
        """A^! degrees of the odd pieces B_1, B_3, ... up to limit."""
        return list(range(1, min(limit, self.degbound) + 1, self.N))

    def even_degrees(self, limit: int, positive: bool = True) -> list[int]:
        start = self.N if positive else 0
        return list(range(start, min(limit, self.degbound) + 1, self.N))

    # ---------- arithmetic ----------

    def normal_form(self, vec: dict) -> dict:
        return self.gb.reduce(vec)

    def mul(self, x: dict, y: dict) -> dict:
        return self.normal_form(concat(x, y))

    def word(self, w: Word) -> dict:
        return self.normal_form({w: Fraction(1)})

    # ---------- dual bases ----------

    def _dual_basis(self, degree: int, vectors: list[dict], what: str) -> list[dict]:
        """b_j in A^!_degree with <b_j, vectors[k]> = delta_jk."""
        words = self.normal_words(degree)
        if len(words) != len(vectors):
            raise ShapeError(f"dim A^!_{degree} = {len(words)} but {what} has dimension {len(vectors)}")
        if not words:
            return []
        pairing = [[vec.get(n, 0) for vec in vectors] for n in words]
        inverse = invert_matrix(pairing)
        return [{n: c for n, c in zip(words, row) if c} for row in inverse]

    @cached_property
    def overlap(self) -> Subspace:
        return overlap_space(self.R)

    @cached_property
    def relation_dual(self) -> list[dict]:
        """r_j^* in B_2 against the relations r_j."""
        return self._dual_basis(self.N, self.relations, "R")

    @cached_property
    def overlap_dual(self) -> list[dict]:
        """o_k^* in B_3 against the echelon basis o_k of (V R) n (R V)."""
        return self._dual_basis(self.N + 1, self.overlap.basis(), "the overlap space")


def build_koszul_dual(R: Subspace, degbound: int, relations: Optional[list[dict]] = None) -> YonedaAlgebra:
    return YonedaAlgebra(R, degbound, relations)

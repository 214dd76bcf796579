"""
The sequence 0 -> wedge^p V -> A_p -> S^p V -> 0 for A = T(V)/(abc - cab).
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import comb

from pydantic import BaseModel, ConfigDict

from src.exactmath.linear import Echelon
from src.tensorspace.subspace import (
    Subspace,
    antisymmetrizer,
    subspace_from_vectors,
    subspace_sum,
    tensor_subspace,
    zero_subspace,
)
from src.tensorspace.words import GradedPiece, all_words


class ExactSequenceReport(BaseModel):
    v: int
    p: int
    dim_A: int
    dim_wedge: int
    dim_sym: int
    i_injective: bool
    j_surjective: bool
    image_in_kernel: bool
    exact: bool
    model_config = ConfigDict(extra="forbid")

    @property
    def holds(self) -> bool:
        return self.exact and self.dim_A == self.dim_wedge + self.dim_sym


def cyclic_relations(v: int) -> Subspace:
    """span{abc - cab} in V^(x)3."""
    vectors = []
    for a, b, c in all_words(v, 3):
        if (a, b, c) != (c, a, b):
            vectors.append({(a, b, c): Fraction(1), (c, a, b): Fraction(-1)})
    return subspace_from_vectors(vectors, v, 3)


def ideal_piece(R: Subspace, p: int) -> Subspace:
    """I_p = sum_i V^(x)i (x) R (x) V^(x)(p - N - i)."""
    N = R.degree
    if p < N:
        return zero_subspace(R.v, p)
    total = tensor_subspace(R, 0, p - N)
    for i in range(1, p - N + 1):
        total = subspace_sum(total, tensor_subspace(R, i, p - N - i))
    return total


def _symmetrize(vec: dict) -> dict:
    out: dict = {}
    for w, c in vec.items():
        key = tuple(sorted(w))
        nc = out.get(key, 0) + c
        if nc:
            out[key] = nc
        else:
            out.pop(key, None)
    return out


def exact_sequence_check(v: int, p: int) -> ExactSequenceReport:
    piece = GradedPiece(v, p)
    I = ideal_piece(cyclic_relations(v), p)
    dim_A = piece.dimension - I.dim
    wedge_p = antisymmetrizer(v, p)
    i_injective = subspace_sum(I, wedge_p).dim == I.dim + wedge_p.dim

    # j on the normal words of A_p, which span it
    normal = [w for w in piece.words() if w not in I.echelon.rows]
    j_image = Echelon()
    for w in normal:
        j_image.insert({tuple(sorted(w)): Fraction(1)})
    dim_sym = comb(v + p - 1, p)
    j_surjective = j_image.rank == dim_sym
    j_kills_ideal = all(not _symmetrize(b) for b in I.basis())
    image_in_kernel = j_kills_ideal and all(not _symmetrize(b) for b in wedge_p.basis())
    exact = i_injective and j_surjective and image_in_kernel and dim_A - dim_sym == wedge_p.dim
    logging.info(f"A = T(V)/(abc - cab), v={v}, p={p}: dim A_p = {dim_A}, exact = {exact}")
    return ExactSequenceReport(
        v=v, p=p, dim_A=dim_A, dim_wedge=comb(v, p), dim_sym=dim_sym,
        i_injective=i_injective, j_surjective=j_surjective,
        image_in_kernel=image_in_kernel, exact=exact,
    )

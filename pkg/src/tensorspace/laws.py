"""
Kernel computations for maps alpha: wedge^N V -> V^(x)(N-s).

The unknowns are the coordinates E[J, u] of alpha(A_J) at the word u, with
A_J the alternating tensor of an increasing N-subset J. The maps
alpha -> left * (1 (x) alpha) + right * (alpha (x) 1), optionally taken
modulo wedge^(N+1-s), preserve the content weight content(u) - J, so the
kernel is computed block by block.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator, Optional

from pydantic import BaseModel, ConfigDict

from src.errors import ShapeError
from src.exactmath.linear import Echelon, add_scaled, rank_of
from src.tensorspace.exterior import ExteriorMap, alternating_word_map, op_Ta
from src.tensorspace.linmap import Operator, TensorProduct
from src.tensorspace.subspace import Subspace, alternating_row, antisymmetrizer
from src.tensorspace.underline import op_underline
from src.tensorspace.words import all_words


class LawCheck(BaseModel):
    """Outcome of one kernel computation against its predicted kernel."""
    law: str
    N: int
    s: int
    v: int
    unknowns: int
    kernel_dim: int
    expected_kernel_dim: int
    candidates_in_kernel: bool
    candidate_rank: int
    model_config = ConfigDict(extra="forbid")

    @property
    def holds(self) -> bool:
        return (
            self.candidates_in_kernel
            and self.kernel_dim == self.expected_kernel_dim
            and self.candidate_rank == self.expected_kernel_dim
        )


# ---------- T_a ----------

def ta_rank(v: int, a: int, p: int, r: int) -> int:
    """Rank of T_a on Hom(wedge^p V, wedge^r V)."""
    images = []
    for P in combinations(range(v), p):
        for R in combinations(range(v), r):
            images.append(op_Ta(ExteriorMap.unit(v, P, R), a).flat())
    return rank_of(images)


def ta_injective(v: int, a: int, p: int, r: int) -> bool:
    return ta_rank(v, a, p, r) == comb(v, p) * comb(v, r)


# ---------- the bracket maps on coordinates ----------

def _content(word, v: int) -> list[int]:
    out = [0] * v
    for i in word:
        out[i] += 1
    return out


def _weight(J, u, v: int) -> tuple[int, ...]:
    c = _content(u, v)
    for j in J:
        c[j] -= 1
    return tuple(c)


def _unknowns(v: int, N: int, s: int) -> Iterator[tuple]:
    for J in combinations(range(v), N):
        for u in all_words(v, N - s):
            yield J, u


def _image(J, u, v: int, left, right) -> dict:
    """(left * 1 (x) alpha + right * alpha (x) 1) of the unit alpha: A_J -> x_u, keyed (I, word)."""
    N = len(J)
    out: dict = {}
    for i in range(v):
        if i in J:
            continue
        I = tuple(sorted(J + (i,)))
        j = I.index(i)
        if left:
            add_scaled(out, {(I, (i,) + u): Fraction((-1) ** j)}, left)
        if right:
            add_scaled(out, {(I, u + (i,)): Fraction((-1) ** (N - j))}, right)
    return out


def _reduce_mod(vec: dict, modulo: Optional[Subspace]) -> dict:
    if modulo is None:
        return vec
    grouped: dict = defaultdict(dict)
    for (I, w), c in vec.items():
        grouped[I][w] = c
    out = {}
    for I, part in grouped.items():
        for w, c in modulo.reduce(part).items():
            out[(I, w)] = c
    return out


def law_kernel_dim(N: int, s: int, v: int, left, right, modulo_degree: Optional[int] = None) -> tuple[int, int]:
    """(number of unknowns, kernel dimension) of the bracket map."""
    if not 0 <= s <= N or N + 1 > v:
        raise ShapeError(f"need 0 <= s <= N and v >= N + 1, got N={N}, s={s}, v={v}")
    modulo = antisymmetrizer(v, modulo_degree) if modulo_degree else None
    blocks: dict = defaultdict(Echelon)
    count = 0
    for J, u in _unknowns(v, N, s):
        count += 1
        blocks[_weight(J, u, v)].insert(_reduce_mod(_image(J, u, v, left, right), modulo))
    rank = sum(b.rank for b in blocks.values())
    logging.info(f"N={N} s={s} v={v}: {count} unknowns in {len(blocks)} blocks, rank {rank}")
    return count, count - rank


def candidate_coordinates(op: Operator, v: int, N: int) -> dict:
    """The coordinates E[J, u] of op restricted to wedge^N V."""
    out = {}
    for J in combinations(range(v), N):
        for u, c in op.apply(alternating_row(J)).items():
            out[(J, u)] = c
    return out


def _law_image(coords: dict, v: int, left, right, modulo: Optional[Subspace]) -> dict:
    out: dict = {}
    for (J, u), c in coords.items():
        add_scaled(out, _image(J, u, v, left, right), c)
    return _reduce_mod(out, modulo)


def form_candidates(N: int, s: int, v: int) -> list[Operator]:
    """1^(N-s) (x) e_S for every s-subset S."""
    return [
        TensorProduct([N - s, alternating_word_map(ExteriorMap.unit(v, S, ()))])
        for S in combinations(range(v), s)
    ]


def bracket_candidates(N: int, s: int, v: int) -> list[Operator]:
    """underline{1^(2p) L} for L = (A_S -> x_k), N = 2p + s + 1."""
    p = (N - s - 1) // 2
    return [
        op_underline(alternating_word_map(ExteriorMap.unit(v, S, (k,))), p, 1)
        for S in combinations(range(v), s + 1)
        for k in range(v)
    ]


def _run(law: str, N: int, s: int, v: int, left, right, modulo_degree, candidates, expected) -> LawCheck:
    count, kernel_dim = law_kernel_dim(N, s, v, left, right, modulo_degree)
    modulo = antisymmetrizer(v, modulo_degree) if modulo_degree else None
    coords = [candidate_coordinates(op, v, N) for op in candidates]
    in_kernel = all(not _law_image(c, v, left, right, modulo) for c in coords)
    return LawCheck(
        law=law, N=N, s=s, v=v, unknowns=count, kernel_dim=kernel_dim,
        expected_kernel_dim=expected, candidates_in_kernel=in_kernel,
        candidate_rank=rank_of(coords),
    )


# ---------- the laws ----------

def image_law_check(N: int, s: int, v: int) -> LawCheck:
    """1 (x) alpha lands in wedge^(N+1-s) iff alpha = 1^(N-s) (x) Phi."""
    return _run("image", N, s, v, 1, 0, N + 1 - s, form_candidates(N, s, v), comb(v, s))


def kernel_law_check(N: int, s: int, v: int) -> LawCheck:
    """1 (x) alpha + (-1)^(s-1) alpha (x) 1 = 0 iff alpha = 1^(N-s) (x) Phi."""
    return _run("kernel", N, s, v, 1, (-1) ** (s - 1), None, form_candidates(N, s, v), comb(v, s))


def injectivity_check(N: int, s: int, v: int) -> LawCheck:
    """1 (x) alpha + (-1)^s alpha (x) 1 is injective."""
    return _run("injective", N, s, v, 1, (-1) ** s, None, [], 0)


def even_law_check(N: int, s: int, v: int) -> LawCheck:
    """For N - s even, {1, alpha} lands in wedge^(N+1-s) iff alpha = 1^(N-s) (x) Phi."""
    if (N - s) % 2:
        raise ShapeError(f"N - s = {N - s} is odd")
    return _run("even", N, s, v, 1, (-1) ** s, N + 1 - s, form_candidates(N, s, v), comb(v, s))


def odd_law_check(N: int, s: int, v: int) -> LawCheck:
    """For N - s odd, {1, alpha} lands in wedge^(N+1-s) iff alpha = underline{1^(2p) L}."""
    if (N - s) % 2 == 0:
        raise ShapeError(f"N - s = {N - s} is even")
    return _run("odd", N, s, v, 1, (-1) ** s, N + 1 - s, bracket_candidates(N, s, v), comb(v, s + 1) * v)

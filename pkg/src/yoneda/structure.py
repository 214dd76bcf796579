"""
The deformed A-infinity structure on B: the derivation d: B^ev -> B^od and
the products m_p on odd arguments.

On linear arguments m_q = sigma(q) (alpha_(N-q))^*, with alpha_0 the
inclusion of R, so m_N is the product and m_0 is the curvature. d on
B_2 is the dual of [1, alpha_1] and extends over N-letter blocks as a
derivation. m_p on longer odd words is defined by splitting the last
non-linear argument as u l and shifting u to the left.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from src.errors import J1Error, ShapeError
from src.exactmath.linear import add_scaled, combine
from src.models import DescentRecord
from src.pbwcheck.conditions import check_J1
from src.pbwcheck.deformation import DeformationData
from src.tensorspace.words import Word, all_words, vec_to_pairs, word_to_str
from src.utils.settings import get_settings
from src.yoneda.koszul_dual import YonedaAlgebra

Args = tuple[Word, ...]

# raw-word descent checks stop past this many argument tuples
DESCENT_SAMPLE_LIMIT = 20_000


def sign_table(N: int) -> dict[int, int]:
    """sigma(N) = 1, sigma(N-1) = (-1)^(N-1), sigma(p-2) = -sigma(p)."""
    if N < 2:
        raise ShapeError(f"N must be at least 2, got {N}")
    sigma = {N: 1, N - 1: (-1) ** (N - 1)}
    for p in range(N - 2, -1, -1):
        sigma[p] = -sigma[p + 2]
    return dict(sorted(sigma.items()))


def sign_conflicts(sigma: dict[int, int]) -> list[int]:
    """Arities q where the arity-indexed sign sigma(q) differs from sigma(N - q)."""
    N = max(sigma)
    return [q for q in range(N + 1) if sigma[q] != sigma[N - q]]


def args_label(args: Args) -> list[str]:
    return [word_to_str(a, dual=True) for a in args]


@dataclass
class AInfStructure:
    algebra: YonedaAlgebra
    data: DeformationData
    sigma: dict[int, int]
    brackets: list[dict]  # [1, alpha_1](o_k), projected to R when J1 fails
    strict: bool = True
    descent: list[DescentRecord] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)  # descent checks left out by the size limit
    _memo: dict = field(default_factory=dict, repr=False)
    _d_memo: dict = field(default_factory=dict, repr=False)

    @property
    def N(self) -> int:
        return self.data.N

    @property
    def conflicts(self) -> list[int]:
        return sign_conflicts(self.sigma)

    # ---------- linear seed ----------

    def m_linear(self, word: Word) -> dict:
        """m_q on q linear arguments, given as one word of length q."""
        q = len(word)
        alpha = self.data.alpha_map(self.N - q) if q < self.N else None
        out: dict = {}
        for j, r_dual in enumerate(self.algebra.relation_dual):
            if alpha is None:
                c = self.algebra.relations[j].get(word, 0)
            else:
                c = alpha.image(j).get(word, 0)
            if c:
                add_scaled(out, r_dual, c * self.sigma[q])
        return out

    @property
    def curvature(self) -> dict:
        """m_0 = sigma(0) (alpha_N)^* in B_2."""
        return self.m_linear(())

    def d_block(self, block: Word) -> dict:
        """d on one N-letter word: sum_k <block, [1, alpha_1](o_k)> o_k^*."""
        out: dict = {}
        for beta, o_dual in zip(self.brackets, self.algebra.overlap_dual):
            c = beta.get(block, 0)
            if c:
                add_scaled(out, o_dual, c)
        return out

    # ---------- d on B^ev ----------

    def d_word(self, w: Word) -> dict:
        if len(w) % self.N:
            raise ShapeError(f"d is defined on even words (length divisible by {self.N}), got {w}")
        if w in self._d_memo:
            return self._d_memo[w]
        N = self.N
        out: dict = {}
        for s in range(0, len(w), N):
            img = self.d_block(w[s:s + N])
            if img:
                add_scaled(out, {w[:s] + t + w[s + N:]: c for t, c in img.items()}, 1)
        value = self.algebra.normal_form(out)
        self._d_memo[w] = value
        return value

    def d(self, vec: dict) -> dict:
        return combine((c, self.d_word(w)) for w, c in vec.items())

    # ---------- m_p on odd words ----------

    def _check_args(self, args: Args) -> None:
        for a in args:
            if len(a) % self.N != 1:
                raise ShapeError(f"argument {word_to_str(a, dual=True)} is not odd")

    def m(self, args: Args) -> dict:
        """m_p(a_1, ..., a_p) on odd words, p = len(args)."""
        p = len(args)
        if p > self.N:
            return {}
        key = args
        if key in self._memo:
            return self._memo[key]
        self._check_args(args)
        j = next((i for i in range(p - 1, -1, -1) if len(args[i]) > 1), None)
        if j is None:
            value = self.m_linear(sum(args, ()))
        else:
            a = args[j]
            value = self.shift(args, j, a[:-1], a[-1:])
        self._memo[key] = value
        return value

    def m_vec(self, args: tuple) -> dict:
        """m_p with vector arguments, expanded multilinearly."""
        terms = [(Fraction(1), ())]
        for vec in args:
            terms = [(c * d, ws + (w,)) for c, ws in terms for w, d in vec.items()]
        return combine((c, self.m(ws)) for c, ws in terms)

    def shift(self, args: Args, j: int, u: Word, rest: Word) -> dict:
        """m_p(.., a_(j-1), u rest, ..) = m_p(.., a_(j-1) u, rest, ..) + (-1)^(p+1) m_(p+1)(.., a_(j-1), d(u), rest, ..)."""
        p = len(args)
        tail = (rest,) + args[j + 1:]
        if j == 0:
            first = self.algebra.mul({u: Fraction(1)}, self.m(tail))
        else:
            first = self.m(args[:j - 1] + (args[j - 1] + u,) + tail)
        out = dict(first)
        if p + 1 <= self.N:
            sign = -1 if p % 2 == 0 else 1
            for w, c in self.d_word(u).items():
                add_scaled(out, self.m(args[:j] + (w,) + tail), c * sign)
        return out

    def alternative(self, args: Args, j: int) -> dict:
        """m_p with a_j split after its first N letters instead of before its last."""
        a = args[j]
        return self.shift(args, j, a[:self.N], a[self.N:])


# ---------- construction ----------

def build_mp_linear(data: DeformationData, algebra: YonedaAlgebra, strict: bool = True) -> AInfStructure:
    """The linear seed: m_q = sigma(q) alpha_(N-q)^* and d = dual of [1, alpha_1] on B_2."""
    if algebra.N != data.N or algebra.v != data.v:
        raise ShapeError("the Yoneda algebra was built for a different R")
    W = algebra.overlap
    j1 = check_J1(data, W)
    if not j1.passed and strict:
        bad = next(k for k, r in enumerate(j1.residuals) if r)
        raise J1Error(f"[1, alpha_1] leaves R on overlap vector {bad}: residual {vec_to_pairs(j1.residuals[bad])}")
    brackets = []
    for coords in j1.coords:
        beta: dict = {}
        for j, c in coords.items():
            add_scaled(beta, data.relations[j], c)
        brackets.append(beta)
    if not j1.passed:
        logging.warning("J1 fails; d is seeded from the R-component of [1, alpha_1]")
    structure = AInfStructure(algebra=algebra, data=data, sigma=sign_table(data.N), brackets=brackets,
                              strict=strict)
    if structure.conflicts:
        logging.info(f"sigma(q) and sigma(N-q) differ at arities {structure.conflicts}")
    return structure


def _differs(x: dict, y: dict) -> dict:
    return combine([(Fraction(1), x), (Fraction(-1), y)])


def extend_mp(structure: AInfStructure, degbound: Optional[int] = None) -> AInfStructure:
    """Evaluate m_p and d on raw words up to degbound and record every descent failure."""
    algebra = structure.algebra
    N = structure.N
    degbound = algebra.degbound if degbound is None else degbound
    limit = min(DESCENT_SAMPLE_LIMIT, get_settings().size_guard)
    records = structure.descent

    # d on raw even words against their normal forms
    for length in algebra.even_degrees(degbound - 1):
        if algebra.v ** length > limit:
            message = f"descent check of d in degree {length} skipped: more than {limit} words"
            logging.warning(message)
            structure.skipped.append(message)
            continue
        for w in all_words(algebra.v, length):
            if algebra.gb.is_normal(w):
                continue
            diff = _differs(structure.d_word(w), structure.d(algebra.word(w)))
            if diff:
                records.append(DescentRecord(kind="differential", p=0, args=args_label((w,)),
                                             difference=vec_to_pairs(diff, dual=True)))

    # m_p with one raw argument of length N + 1 against its normal form
    if 2 * N <= degbound:
        raw = [w for w in all_words(algebra.v, N + 1) if not algebra.gb.is_normal(w)]
        for p in range(1, N + 1):
            if len(raw) * p * algebra.v ** (p - 1) > limit:
                message = f"normal-form descent check of m_{p} skipped: more than {limit} tuples"
                logging.warning(message)
                structure.skipped.append(message)
                continue
            for pos in range(p):
                for letters in all_words(algebra.v, p - 1):
                    for w in raw:
                        args = tuple((x,) for x in letters[:pos]) + (w,) + tuple((x,) for x in letters[pos:])
                        nf_args = tuple({a: Fraction(1)} for a in args[:pos]) + (algebra.word(w),) + \
                            tuple({a: Fraction(1)} for a in args[pos + 1:])
                        diff = _differs(structure.m(args), structure.m_vec(nf_args))
                        if diff:
                            records.append(DescentRecord(kind="normal_form", p=p, args=args_label(args),
                                                         difference=vec_to_pairs(diff, dual=True)))

    # alternative factorizations of long arguments
    for p in range(1, N + 1):
        for args in odd_tuples(algebra, p, degbound - N + p):
            for j, a in enumerate(args):
                if len(a) < 2 * N + 1:
                    continue
                diff = _differs(structure.m(args), structure.alternative(args, j))
                if diff:
                    records.append(DescentRecord(kind="factorization", p=p, args=args_label(args),
                                                 difference=vec_to_pairs(diff, dual=True)))
    if records:
        logging.warning(f"{len(records)} descent failures")
    return structure


def odd_tuples(algebra: YonedaAlgebra, p: int, total: int) -> list[Args]:
    """Tuples of p odd normal words with total length at most `total`."""
    degrees = algebra.odd_degrees(total)
    out: list[Args] = []

    def extend(prefix: Args, used: int) -> None:
        if len(prefix) == p:
            out.append(prefix)
            return
        remaining = p - len(prefix) - 1
        for deg in degrees:
            if used + deg + remaining > total:
                break
            for w in algebra.normal_words(deg):
                extend(prefix + (w,), used + deg)

    extend((), 0)
    return out

"""
Exhaustive checks of the two reduced A-infinity axioms on normal-word
tuples within a degree bound.

  (1)  d m_(p+1)(a_1..a_(p+1)) = (-1)^p (a_1 m_p(a_2..) - m_p(..a_p) a_(p+1))
  (2)  m_p(.., a_(i-1), u a_i, ..) = m_p(.., a_(i-1) u, a_i, ..)
                                     + (-1)^(p+1) m_(p+1)(.., a_(i-1), d(u), a_i, ..)

In (2) u multiplies outside m_p on the left when i = 1 and on the right
when i = p + 1.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Optional

from src.exactmath.linear import combine
from src.models import AxiomInstance, AxiomLevel
from src.tensorspace.words import vec_to_pairs
from src.yoneda.structure import AInfStructure, Args, args_label, odd_tuples

# failing instances kept per level
MAX_REPORTED = 10


def _unit(w) -> dict:
    return {w: Fraction(1)}


def axiom1_residual(structure: AInfStructure, args: Args) -> dict:
    B = structure.algebra
    p = len(args) - 1
    lhs = structure.d(structure.m(args))
    left = B.mul(_unit(args[0]), structure.m(args[1:]))
    right = B.mul(structure.m(args[:-1]), _unit(args[-1]))
    sign = 1 if p % 2 == 0 else -1
    return combine([(Fraction(1), lhs), (Fraction(-sign), left), (Fraction(sign), right)])


def axiom2_residual(structure: AInfStructure, args: Args, u, position: int) -> dict:
    """position t = i - 1 in 0..p: u sits between args[t-1] and args[t]."""
    B = structure.algebra
    p = len(args)
    t = position
    if t < p:
        lhs = structure.m(args[:t] + (u + args[t],) + args[t + 1:])
    else:
        lhs = B.mul(structure.m(args), _unit(u))
    if t > 0:
        first = structure.m(args[:t - 1] + (args[t - 1] + u,) + args[t:])
    else:
        first = B.mul(_unit(u), structure.m(args))
    terms = [(Fraction(1), lhs), (Fraction(-1), first)]
    if p + 1 <= structure.N:
        sign = Fraction(1) if p % 2 else Fraction(-1)
        for w, c in structure.d_word(u).items():
            terms.append((-sign * c, structure.m(args[:t] + (w,) + args[t:])))
    return combine(terms)


def check_axiom_1(structure: AInfStructure, degbound: Optional[int] = None,
                  linear_only: bool = False) -> list[AxiomLevel]:
    """One level per p in 0..N-1 over odd normal-word tuples of value degree <= degbound."""
    N = structure.N
    degbound = structure.algebra.degbound if degbound is None else degbound
    levels = []
    for p in range(N):
        total = p + 1 if linear_only else degbound - N + p
        level = AxiomLevel(p=p, verdict="pass", checked=0)
        for args in odd_tuples(structure.algebra, p + 1, total):
            level.checked += 1
            res = axiom1_residual(structure, args)
            if res:
                level.verdict = "fail"
                if len(level.failures) < MAX_REPORTED:
                    level.failures.append(AxiomInstance(p=p, args=args_label(args),
                                                        residual=vec_to_pairs(res, dual=True)))
        if level.verdict == "fail":
            logging.warning(f"axiom 1 fails at p={p}")
        levels.append(level)
    return levels


def check_axiom_2(structure: AInfStructure, degbound: Optional[int] = None) -> list[AxiomLevel]:
    """One level per p in 0..N over every insertion position and even normal word u."""
    B = structure.algebra
    N = structure.N
    degbound = B.degbound if degbound is None else degbound
    levels = []
    for p in range(N + 1):
        level = AxiomLevel(p=p, verdict="pass", checked=0)
        budget = degbound - N + p
        for u_degree in B.even_degrees(budget - p):
            for u in B.normal_words(u_degree):
                for args in odd_tuples(B, p, budget - u_degree):
                    for t in range(p + 1):
                        level.checked += 1
                        res = axiom2_residual(structure, args, u, t)
                        if res:
                            level.verdict = "fail"
                            if len(level.failures) < MAX_REPORTED:
                                level.failures.append(AxiomInstance(
                                    p=p, position=t + 1, args=args_label(args) + [f"u={args_label((u,))[0]}"],
                                    residual=vec_to_pairs(res, dual=True)))
        if level.verdict == "fail":
            logging.warning(f"axiom 2 fails at p={p}")
        levels.append(level)
    return levels


def curvature_check(structure: AInfStructure) -> bool:
    """d(m_0) = 0."""
    return not structure.d(structure.curvature)

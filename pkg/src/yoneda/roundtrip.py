"""
From the A-infinity structure back to alpha, and the axiom/condition
dictionary.
"""
from __future__ import annotations

from fractions import Fraction

from src.exactmath.linear import combine
from src.models import DictionaryEntry
from src.pbwcheck.conditions import check_J1, check_J2
from src.pbwcheck.deformation import DeformationData
from src.tensorspace.subspace import pair
from src.tensorspace.words import all_words
from src.yoneda.axioms import check_axiom_1, curvature_check
from src.yoneda.structure import AInfStructure


def roundtrip_alpha(structure: AInfStructure) -> DeformationData:
    """alpha_p(r_j) = sigma(N-p) sum_a <m_(N-p)(a), r_j> a over words a of length N - p."""
    data = structure.data
    N = data.N
    relations = structure.algebra.relations
    images: dict[int, list[dict]] = {}
    for p in range(1, N + 1):
        q = N - p
        rows: list[dict] = [{} for _ in relations]
        for a in all_words(data.v, q):
            value = structure.m(tuple((x,) for x in a))
            if not value:
                continue
            for j, r in enumerate(relations):
                c = pair(value, r)
                if c:
                    rows[j][a] = c * structure.sigma[q]
        images[p] = rows
    return DeformationData.from_images(data.v, N, relations, images, field_=data.field_spec, ring=data.ring)


def roundtrip_matches(structure: AInfStructure) -> bool:
    recovered = roundtrip_alpha(structure)
    for i in range(1, structure.N + 1):
        original = structure.data.alpha_map(i)
        again = recovered.alpha_map(i)
        for j in range(len(structure.data.relations)):
            if combine([(Fraction(1), original.image(j)), (Fraction(-1), again.image(j))]):
                return False
    return True


def axiom_condition_dictionary(structure: AInfStructure) -> list[DictionaryEntry]:
    """Axiom 1 on linear tuples at p = N-1 against J1, at p < N-1 against J2 at i = N-1-p,
    and d(m_0) = 0 against J2 at i = N."""
    data = structure.data
    W = structure.algebra.overlap
    j1 = check_J1(data, W)
    levels = {lv.i: lv for lv in check_J2(data, j1, W)}
    axiom = {lv.p: lv.verdict for lv in check_axiom_1(structure, linear_only=True)}
    entries = []
    N = data.N
    for p in range(N):
        if p == N - 1:
            condition, passed = "J1", j1.passed
        else:
            i = N - 1 - p
            condition, passed = f"J2[i={i}]", levels[i].passed
        verdict = "pass" if passed else "fail"
        entries.append(DictionaryEntry(p=p, condition=condition, axiom_verdict=axiom[p],
                                       condition_verdict=verdict, agree=axiom[p] == verdict))
    curv = "pass" if curvature_check(structure) else "fail"
    cond = "pass" if levels[N].passed else "fail"
    entries.append(DictionaryEntry(p=0, condition="curvature", axiom_verdict=curv,
                                   condition_verdict=cond, agree=curv == cond))
    return entries

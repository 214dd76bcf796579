"""
Build alpha_1..alpha_N on R = wedge^N V from (l, Phi) for odd N and from
(L, Phi) for even N.

wedge^N V sits in V^(x)N as the span of the antisymmetrized words; every
alpha_i is an operator on V^(x)N evaluated on those rows. Forms and
brackets act on words through their alternating extension.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import Optional

import numpy as np

from src.errors import DimensionHypothesisError, GeneralizedJacobiError, JacobiError, TopFormError
from src.exactmath.cyclotomic import FieldSpec
from src.pbwcheck.deformation import DeformationData
from src.tensorspace.exterior import (
    ExteriorMap,
    alternating_word_map,
    gen_jacobi_map,
    jacobi_map,
    top_form_map,
)
from src.tensorspace.linmap import Composite, Operator, OperatorSum, TensorProduct
from src.tensorspace.subspace import alternating_row
from src.tensorspace.underline import op_underline
from src.tensorspace.words import word_to_str
from src.wedgedef.data import (
    EvenNData,
    FormDoc,
    OddNData,
    bracket_map,
    field_of,
    forms_by_degree,
    linear_form_map,
    top_form_of,
)


# ---------- hypotheses ----------

def dimension_gate(v: int, N: int, allow_small_v: bool = False) -> list[str]:
    """v >= N + 2 for N >= 3; v = N + 1 is never accepted, v = N only with the override."""
    if N < 3:
        return []
    if v == N + 1:
        raise DimensionHypothesisError(f"v = N + 1 = {v} is not covered by the wedge construction")
    if v < N:
        raise DimensionHypothesisError(f"wedge^{N} V is zero for v = {v}")
    if v == N:
        if not allow_small_v:
            raise DimensionHypothesisError(f"v = {v} < N + 2; pass allow_small_v to build anyway")
        msg = f"v = {v} is below N + 2; the construction is built but not guaranteed"
        logging.warning(msg)
        return [msg]
    return []


def _witness(m: ExteriorMap) -> str:
    first = m.first_nonzero()
    if first is None:
        return ""
    P, img = first
    return f"{word_to_str(P)} -> {img}"


def jacobi_check(L: ExteriorMap) -> bool:
    return jacobi_map(L).is_zero()


def gen_jacobi_check(L: ExteriorMap, phi: ExteriorMap) -> bool:
    """L o Phi o L vanishes on wedge^(2r+3) V; Phi = 1 is the ordinary Jacobi identity."""
    return gen_jacobi_map(L, phi).is_zero()


def check_even_data(L: ExteriorMap, forms: dict[int, ExteriorMap], top: Optional[ExteriorMap]) -> None:
    """Raise the named error for the first hypothesis that fails."""
    J = jacobi_map(L)
    if not J.is_zero():
        raise JacobiError(f"L fails the Jacobi identity: {_witness(J)}")
    for degree in sorted(forms):
        G = gen_jacobi_map(L, forms[degree])
        if not G.is_zero():
            raise GeneralizedJacobiError(
                degree, f"L o Phi_{degree} o L is nonzero on wedge^{degree + 3} V: {_witness(G)}")
    if top is not None:
        T = top_form_map(L, top)
        if not T.is_zero():
            raise TopFormError(f"Phi_{top.p} o (1 (x) L) is nonzero on wedge^{top.p + 1} V: {_witness(T)}")


# ---------- realization on R ----------

def wedge_relations(v: int, N: int) -> list[dict]:
    return [alternating_row(J) for J in combinations(range(v), N)]


def _deformation(v: int, N: int, ops: dict[int, Operator], field: FieldSpec) -> DeformationData:
    relations = wedge_relations(v, N)
    images = {i: [op.apply(r) for r in relations] for i, op in ops.items()}
    return DeformationData.from_images(v, N, relations, images, field_=field)


def _form_op(phi: Optional[ExteriorMap]) -> Optional[Operator]:
    if phi is None or phi.is_zero():
        return None
    return alternating_word_map(phi)


def odd_operators(N: int, l_op: Optional[Operator], form_ops: dict[int, Operator]) -> dict[int, Operator]:
    """alpha_2r = 1^(N-2r) (x) Phi_2r and alpha_(2r+1) = 1^(N-2r-1) (x) l (x) Phi_2r, with Phi_0 = 1."""
    ops: dict[int, Operator] = {}
    for two_r in range(0, N, 2):
        phi = form_ops.get(two_r)
        if two_r > 0 and phi is not None:
            ops[two_r] = TensorProduct([N - two_r, phi])
        if l_op is not None and (two_r == 0 or phi is not None):
            factors = [N - two_r - 1, l_op] + ([phi] if two_r > 0 else [])
            ops[two_r + 1] = TensorProduct(factors)
    return ops


def even_operators(N: int, L_op: Optional[Operator], form_ops: dict[int, Operator],
                   top_op: Optional[Operator]) -> dict[int, Operator]:
    """The shuffle sums of L against Phi_0 = 1, Phi_2, ..., plus r 1^(2n-2r-1) (x) Phi_2r o (1^(2r-1) (x) L)."""
    n = N // 2
    ops: dict[int, Operator] = {}

    def summands(i_max: int, a_of, b_of) -> list:
        terms = []
        for i in range(i_max + 1):
            a, b = a_of(i), b_of(i)
            if a < 0:
                continue
            phi = form_ops.get(2 * i)
            if i > 0 and phi is None:
                continue
            if b > 0 and L_op is None:
                continue
            if b > 0:
                head: Operator = op_underline(L_op, a, b)
            else:
                head = TensorProduct([2 * a])
            terms.append((Fraction(1), TensorProduct([head, phi]) if i > 0 else head))
        return terms

    for i in range(1, N):
        r = i // 2
        if i % 2 == 0:
            terms = summands(r, lambda k: n - 2 * r + k, lambda k: 2 * r - 2 * k)
        else:
            terms = summands(r, lambda k: n - 2 * r - 1 + k, lambda k: 2 * r + 1 - 2 * k)
            phi = form_ops.get(2 * r)
            if r > 0 and phi is not None and L_op is not None:
                inner = Composite(phi, TensorProduct([2 * r - 1, L_op]))
                terms.append((Fraction(r), TensorProduct([N - 2 * r - 1, inner])))
        if terms:
            ops[i] = OperatorSum(terms, (N, N - i))
    if top_op is not None:
        ops[N] = top_op
    return ops


# ---------- builders ----------

def build_alpha_odd(data: OddNData) -> DeformationData:
    dimension_gate(data.v, data.N, data.allow_small_v)
    field = field_of(data)
    l_op = _form_op(linear_form_map(data.l, data.v, field))
    form_ops = {d: op for d, phi in forms_by_degree(data.forms, data.v, field).items()
                if (op := _form_op(phi)) is not None}
    ops = odd_operators(data.N, l_op, form_ops)
    logging.info(f"Building odd wedge deformation N={data.N}, v={data.v}: nonzero alpha_{sorted(ops)}")
    return _deformation(data.v, data.N, ops, field)


def build_alpha_even(data: EvenNData) -> DeformationData:
    dimension_gate(data.v, data.N, data.allow_small_v)
    field = field_of(data)
    L = bracket_map(data.L, data.v, field)
    forms = forms_by_degree(data.forms, data.v, field)
    top = top_form_of(data, field)
    check_even_data(L, forms, top)
    L_op = None if L.is_zero() else alternating_word_map(L)
    form_ops = {d: op for d, phi in forms.items() if (op := _form_op(phi)) is not None}
    ops = even_operators(data.N, L_op, form_ops, _form_op(top))
    logging.info(f"Building even wedge deformation N={data.N}, v={data.v}: nonzero alpha_{sorted(ops)}")
    return _deformation(data.v, data.N, ops, field)


# ---------- examples ----------

def _labels(v: int, size: int) -> list[str]:
    return [word_to_str(I) for I in combinations(range(v), size)]


def random_odd_data(v: int, N: int, rng: np.random.Generator, low: int = -3, high: int = 3) -> OddNData:
    """Random integer l and Phi_2r for every 2 <= 2r < N."""
    l = {word_to_str((i,)): int(rng.integers(low, high + 1)) for i in range(v)}
    forms = []
    for degree in range(2, N, 2):
        coeffs = {label: int(rng.integers(low, high + 1)) for label in _labels(v, degree)}
        forms.append(FormDoc(degree=degree, coefficients={k: c for k, c in coeffs.items() if c}))
    return OddNData(v=v, N=N, l={k: c for k, c in l.items() if c}, forms=forms)


def heisenberg_example(v: int = 6) -> EvenNData:
    """N = 4 with L(x ^ y) = z and Phi_2 = t* ^ u*; L o Phi_2 o L vanishes."""
    if v < 6:
        raise DimensionHypothesisError(f"the Heisenberg example needs v >= 6, got {v}")
    return EvenNData(v=v, N=4, L={"xy": {"z": 1}}, forms=[FormDoc(degree=2, coefficients={"tu": 1})])

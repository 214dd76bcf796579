"""
The shuffle operators built from a bracket-like map L.

underline(L, a, b) sums every arrangement of a identity pairs and b copies
of L; pm_underline(L, a) is the alternating sum of L slid across a
identity factors.
"""
from __future__ import annotations

from fractions import Fraction

from src.errors import ShapeError
from src.tensorspace.linmap import Operator, OperatorSum, TensorProduct, interleavings


def op_underline(L: Operator, a: int, b: int) -> Operator:
    """underline{1^(2a) L^b}: V^(x)(2a + m b) -> V^(x)(2a + b) for L of arity m."""
    if a < 0 or b < 0:
        raise ShapeError(f"underline needs a, b >= 0, got a={a}, b={b}")
    if L.codomain_width != 1:
        raise ShapeError("underline expects L to land in V")
    terms = []
    for pattern in interleavings(a, b):
        terms.append((Fraction(1), TensorProduct([L if is_l else 2 for is_l in pattern])))
    widths = (2 * a + L.domain_width * b, 2 * a + b)
    return OperatorSum(terms, widths)


def op_pm_underline(L: Operator, a: int) -> Operator:
    """1^a (x) L - 1^(a-1) (x) L (x) 1 + ... + (-1)^a L (x) 1^a."""
    if a < 0:
        raise ShapeError(f"pm_underline needs a >= 0, got {a}")
    terms = [(Fraction((-1) ** k), TensorProduct([a - k, L, k])) for k in range(a + 1)]
    return OperatorSum(terms, (a + L.domain_width, a + L.codomain_width))


def op_commutator(op: Operator) -> Operator:
    """[1, op] = 1 (x) op - op (x) 1 as an operator on all words."""
    return TensorProduct([1, op]) - TensorProduct([op, 1])

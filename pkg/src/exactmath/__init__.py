from src.exactmath.cyclotomic import FieldElement, FieldSpec, format_scalar, get_field
from src.exactmath.linear import (
    AffineSolution,
    Echelon,
    add_scaled,
    combine,
    intersect,
    invert_matrix,
    kernel,
    linear_extract,
    rank_of,
    scaled,
    solve_affine,
)
from src.exactmath.parsing import parse_any, parse_poly, parse_scalar
from src.exactmath.polynomial import PolyElement, PolyRing


def field_arith(a, b, op: str):
    """a op b for op in add/sub/mul/div; division by zero raises FieldDivisionError."""
    return _ARITH[op](a, b)


def poly_arith(p: PolyElement, q: PolyElement, op: str) -> PolyElement:
    return _ARITH[op](p, q)


def poly_substitute(p: PolyElement, bindings) -> PolyElement:
    return p.substitute(bindings)


def _div(a, b):
    from fractions import Fraction

    from src.errors import FieldDivisionError

    if not b:
        raise FieldDivisionError("division by zero")
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


_ARITH = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": _div,
}

__all__ = [
    "AffineSolution",
    "Echelon",
    "FieldElement",
    "FieldSpec",
    "PolyElement",
    "PolyRing",
    "add_scaled",
    "combine",
    "field_arith",
    "format_scalar",
    "get_field",
    "intersect",
    "invert_matrix",
    "kernel",
    "linear_extract",
    "parse_any",
    "parse_poly",
    "parse_scalar",
    "poly_arith",
    "poly_substitute",
    "rank_of",
    "scaled",
    "solve_affine",
]

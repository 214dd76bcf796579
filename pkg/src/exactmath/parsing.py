"""
Parsing of serialized scalars and polynomials.

Strings use `z` for the root of unity, `^` or `**` for powers, and the
parameter names of the target ring, e.g. "gamma*(1+2*z^2)/(1+z)".
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy as sp
from sympy.polys.polyerrors import CoercionFailed
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from src.errors import InputError
from src.exactmath.cyclotomic import FieldSpec
from src.exactmath.polynomial import PolyElement, PolyRing

_TRANSFORMS = standard_transformations + (convert_xor,)


@lru_cache(maxsize=256)
def _local_dict(symbol: str, names: tuple[str, ...]) -> dict:
    local = {name: sp.Symbol(name) for name in names}
    local[symbol] = sp.Symbol(symbol)
    return local


def _sympify(text: str, symbol: str, names: tuple[str, ...]):
    local = _local_dict(symbol, names)
    try:
        expr = parse_expr(text, local_dict=dict(local), transformations=_TRANSFORMS, evaluate=True)
    except Exception as e:
        raise InputError(f"cannot parse '{text}': {e}") from None
    unknown = {str(s) for s in expr.free_symbols} - set(local)
    if unknown:
        raise InputError(f"unknown symbols {sorted(unknown)} in '{text}'")
    return expr


def _poly_terms(expr, gens: list[sp.Symbol]):
    poly = sp.Poly(sp.expand(expr), *gens, domain=sp.QQ)
    for exps, coeff in poly.terms():
        yield exps, Fraction(int(coeff.p), int(coeff.q))


def _to_poly_element(expr, ring: PolyRing) -> PolyElement:
    field = ring.field
    zsym = sp.Symbol(field.symbol)
    gens = list(ring.sympy_gens) + [zsym]
    num_expr, den_expr = sp.fraction(sp.together(expr))

    def build(e) -> PolyElement:
        num: dict = {}
        for exps, coeff in _poly_terms(e, gens):
            key = tuple(exps[:-1])
            powers = [0] * (exps[-1] + 1)
            powers[exps[-1]] = coeff
            value = field.element(powers)
            num[key] = num.get(key, 0) + value
        return PolyElement(ring, num, {ring.zero_exps(): field.one()})

    return build(num_expr) / build(den_expr)


def parse_scalar(text, field: FieldSpec):
    """Parse '3/2', '-z', '1/2 + 3/2*z^2' into a field scalar."""
    if isinstance(text, (int, Fraction)):
        return field.coerce(text)
    text = str(text).strip()
    try:
        return field.coerce(Fraction(text))
    except (ValueError, ZeroDivisionError):
        pass
    ring = PolyRing(field, ())
    return parse_poly(text, ring).constant_value()


def parse_poly(text, ring: PolyRing) -> PolyElement:
    """Parse a polynomial or rational function in the ring's parameters."""
    if isinstance(text, PolyElement):
        return ring.coerce(text)
    if isinstance(text, (int, Fraction)):
        return ring.const(text)
    text = str(text).strip()
    try:
        return ring.const(Fraction(text))
    except (ValueError, ZeroDivisionError):
        pass
    expr = _sympify(text, ring.field.symbol, ring.names)
    try:
        return _to_poly_element(expr, ring)
    except (sp.PolynomialError, CoercionFailed) as e:
        raise InputError(f"'{text}' is not a rational function in {list(ring.names)}: {e}") from None


def parse_any(text, field: FieldSpec, ring: PolyRing | None):
    """Numeric scalar when no ring is given, otherwise a PolyElement."""
    if ring is None:
        return parse_scalar(text, field)
    return parse_poly(text, ring)

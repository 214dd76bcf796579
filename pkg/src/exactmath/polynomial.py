"""
Multivariate polynomials and rational functions over Q(zeta_n).

A PolyElement is num/den where num and den are sparse maps from exponent
tuples to field scalars. Canonical form:

- no zero terms are stored
- a constant denominator is folded into the numerator (polynomials have den = 1)
- numerator and denominator are gcd-reduced through sympy, over Q(zeta_n)
  with sympy's algebraic field for the root of Phi_n
- the denominator is monic in its leading monomial

Two elements with equal value therefore store the same num and den.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence, Union

import sympy as sp

from src.errors import FieldDivisionError, ShapeError
from src.exactmath.cyclotomic import FieldElement, FieldSpec, cyclotomic_coefficients, format_scalar

Exps = tuple[int, ...]
Poly = dict[Exps, object]


def monomial_key(exps: Exps):
    """Graded order: total degree first, then exponent tuple."""
    return (sum(exps), exps)


# ---------- raw polynomial helpers ----------

def _padd(p: Poly, q: Poly, scale=1) -> Poly:
    out = dict(p)
    for e, c in q.items():
        nc = out.get(e, 0) + scale * c
        if nc:
            out[e] = nc
        else:
            out.pop(e, None)
    return out


def _pmul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            nc = out.get(e, 0) + c1 * c2
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
    return out


def _pscale(p: Poly, c) -> Poly:
    if not c:
        return {}
    return {e: v * c for e, v in p.items()}


def _is_constant(p: Poly) -> bool:
    return all(not any(e) for e in p)


def _constant_value(p: Poly, nvars: int):
    return p.get((0,) * nvars, 0)


@dataclass(frozen=True)
class PolyRing:
    """Ordered parameter names over a cyclotomic field."""

    field: FieldSpec
    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate parameter names in {self.names}")
        if self.field.symbol in self.names:
            raise ValueError(f"'{self.field.symbol}' is reserved for the root of unity")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @cached_property
    def sympy_gens(self) -> tuple[sp.Symbol, ...]:
        return tuple(sp.Symbol(name) for name in self.names)

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise ShapeError(f"unknown parameter '{name}' (ring has {list(self.names)})") from None

    def zero_exps(self) -> Exps:
        return (0,) * self.nvars

    def const(self, value) -> "PolyElement":
        value = self.field.coerce(value)
        num = {self.zero_exps(): value} if value else {}
        return PolyElement(self, num, {self.zero_exps(): self.field.one()}, _canonical=True)

    def zero(self) -> "PolyElement":
        return self.const(0)

    def one(self) -> "PolyElement":
        return self.const(1)

    def gen(self, name: str) -> "PolyElement":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return PolyElement(self, {tuple(exps): self.field.one()}, {self.zero_exps(): self.field.one()}, _canonical=True)

    def coerce(self, value) -> "PolyElement":
        if isinstance(value, PolyElement):
            if value.ring == self:
                return value
            return value.change_ring(self)
        return self.const(value)

    def extend(self, extra: Iterable[str]) -> "PolyRing":
        names = list(self.names)
        names.extend(n for n in extra if n not in self.names)
        return PolyRing(self.field, tuple(names))

    def parse(self, text: str) -> "PolyElement":
        from src.exactmath.parsing import parse_poly
        return parse_poly(text, self)


class PolyElement:
    """A rational function num/den in the parameters of a PolyRing."""

    __slots__ = ("ring", "num", "den")
    __hash__ = None

    def __init__(self, ring: PolyRing, num: Poly, den: Poly, _canonical: bool = False):
        self.ring = ring
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(ring, num, den)

    # ---------- coercion ----------

    def _other(self, other) -> "PolyElement | None":
        if isinstance(other, PolyElement):
            if other.ring != self.ring:
                if other.ring.field != self.ring.field:
                    raise ShapeError("polynomials over different fields")
                return other.change_ring(self.ring)
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.ring.const(other)
        return None

    def change_ring(self, ring: PolyRing) -> "PolyElement":
        """Re-index into a ring whose names contain all names used here."""
        mapping = [ring.index(n) for n in self.ring.names]

        def move(p: Poly) -> Poly:
            out: Poly = {}
            for e, c in p.items():
                new = [0] * ring.nvars
                for i, k in enumerate(e):
                    if k:
                        new[mapping[i]] = k
                out[tuple(new)] = c
            return out

        return PolyElement(ring, move(self.num), move(self.den), _canonical=True)

    # ---------- arithmetic ----------

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return PolyElement(self.ring, _padd(self.num, o.num), self.den)
        num = _padd(_pmul(self.num, o.den), _pmul(o.num, self.den))
        return PolyElement(self.ring, num, _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return PolyElement(self.ring, {e: -c for e, c in self.num.items()}, self.den, _canonical=True)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            if not other:
                return self.ring.zero()
            return PolyElement(self.ring, _pscale(self.num, other), self.den, _canonical=True)
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return self.ring.zero()
        return PolyElement(self.ring, _pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise FieldDivisionError("division by the zero polynomial")
        return PolyElement(self.ring, _pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.ring.one() / (self ** (-exponent))
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ---------- predicates ----------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return self.num == o.num
        return _pmul(self.num, o.den) == _pmul(o.num, self.den)

    @property
    def is_polynomial(self) -> bool:
        return _is_constant(self.den)

    @property
    def is_constant(self) -> bool:
        return _is_constant(self.num) and _is_constant(self.den)

    def constant_value(self):
        """The field scalar of a constant element."""
        if not self.is_constant:
            raise ShapeError(f"{self} is not constant")
        return self.ring.field.coerce(_constant_value(self.num, self.ring.nvars)) / _constant_value(self.den, self.ring.nvars)

    def variables(self) -> set[str]:
        used = set()
        for p in (self.num, self.den):
            for e in p:
                used.update(self.ring.names[i] for i, k in enumerate(e) if k)
        return used

    def degree_in(self, names: Iterable[str]) -> int:
        """Highest total degree of a numerator term in the given names."""
        idx = [self.ring.index(n) for n in names]
        return max((sum(e[i] for i in idx) for e in self.num), default=0)

    # ---------- substitution ----------

    def substitute(self, bindings: Mapping[str, object]) -> "PolyElement":
        """Replace parameters by PolyElements or scalars of the same ring."""
        if not bindings:
            return self
        values: list = []
        for name in self.ring.names:
            if name in bindings:
                values.append(self.ring.coerce(bindings[name]))
            else:
                values.append(None)
        num = _evaluate(self.ring, self.num, values)
        den = _evaluate(self.ring, self.den, values)
        if not den:
            raise FieldDivisionError(f"denominator of {self} vanishes under substitution")
        return num / den

    def evaluate(self, bindings: Mapping[str, object]):
        """Substitute every parameter and return a field scalar."""
        missing = self.variables() - set(bindings)
        if missing:
            raise ShapeError(f"no value for parameters {sorted(missing)}")
        return self.substitute(bindings).constant_value()

    # ---------- proportionality ----------

    def is_proportional(self, other: "PolyElement") -> bool:
        """True if other = c * self for a nonzero field constant c."""
        if not self or not other:
            return False
        ratio = other / self
        return ratio.is_constant

    # ---------- serialization ----------

    def __str__(self):
        num = _format_poly(self.ring, self.num)
        if _is_constant(self.den):
            return num
        return f"({num})/({_format_poly(self.ring, self.den)})"

    def __repr__(self):
        return f"PolyElement({self})"


def _evaluate(ring: PolyRing, poly: Poly, values: Sequence) -> PolyElement:
    result = ring.zero()
    powers: dict[tuple[int, int], PolyElement] = {}
    for e, c in poly.items():
        term_num = {tuple(k if values[i] is None else 0 for i, k in enumerate(e)): c}
        term = PolyElement(ring, term_num, {ring.zero_exps(): ring.field.one()}, _canonical=True)
        for i, k in enumerate(e):
            if k and values[i] is not None:
                key = (i, k)
                if key not in powers:
                    powers[key] = values[i] ** k
                term = term * powers[key]
        result = result + term
    return result


def _to_sympy(ring: PolyRing, poly: Poly) -> sp.Poly:
    data = {}
    for e, c in poly.items():
        c = Fraction(c)
        data[e] = sp.Rational(c.numerator, c.denominator)
    return sp.Poly.from_dict(data, *ring.sympy_gens, domain=sp.QQ)


def _from_sympy(poly: sp.Poly) -> Poly:
    return {tuple(e): Fraction(int(c.p), int(c.q)) for e, c in poly.as_dict().items() if c}


@lru_cache(maxsize=None)
def _number_field(conductor: int) -> sp.polys.domains.AlgebraicField:
    """sympy's Q(zeta_n), generated by a root of Phi_n with power basis 1, z, z^2, ..."""
    t = sp.Symbol("t")
    phi = sp.Poly(list(reversed(cyclotomic_coefficients(conductor))), t, domain=sp.QQ)
    return sp.QQ.algebraic_field((phi, sp.CRootOf(phi, 0)))


def _to_anp(K, value):
    coeffs = value.coeffs if isinstance(value, FieldElement) else (Fraction(value),)
    return K.new([sp.QQ(c.numerator, c.denominator) for c in reversed(coeffs)])


def _to_number_field_poly(ring: PolyRing, poly: Poly) -> sp.Poly:
    K = _number_field(ring.field.conductor)
    data = {e: _to_anp(K, c) for e, c in poly.items()}
    return sp.Poly.from_dict(data, *ring.sympy_gens, domain=K)


def _from_number_field_poly(ring: PolyRing, poly: sp.Poly) -> Poly:
    out: Poly = {}
    for e, a in poly.as_dict(native=True).items():
        powers = [Fraction(int(q.numerator), int(q.denominator)) for q in reversed(a.to_list())]
        c = ring.field.element(powers)
        if c:
            out[tuple(e)] = c
    return out


def _cancel_gcd(ring: PolyRing, num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Divide num and den by their polynomial gcd over the ring's field."""
    if ring.field.is_rational:
        pn, pd = _to_sympy(ring, num), _to_sympy(ring, den)
        g = pn.gcd(pd)
        if g.total_degree() == 0:
            return num, den
        return _from_sympy(pn.exquo(g)), _from_sympy(pd.exquo(g))
    pn, pd = _to_number_field_poly(ring, num), _to_number_field_poly(ring, den)
    g = pn.gcd(pd)
    if g.total_degree() == 0:
        return num, den
    return _from_number_field_poly(ring, pn.exquo(g)), _from_number_field_poly(ring, pd.exquo(g))


def _normalize(ring: PolyRing, num: Poly, den: Poly) -> tuple[Poly, Poly]:
    field = ring.field
    one = {ring.zero_exps(): field.one()}
    num = {e: c for e, c in num.items() if c}
    if not num:
        return {}, one
    den = {e: c for e, c in den.items() if c}
    if not den:
        raise FieldDivisionError("zero denominator")
    if _is_constant(den):
        c = _constant_value(den, ring.nvars)
        return ({e: v / c for e, v in num.items()} if c != 1 else num), one
    num, den = _cancel_gcd(ring, num, den)
    if _is_constant(den):
        c = _constant_value(den, ring.nvars)
        return {e: v / c for e, v in num.items()}, one
    lead = max(den, key=monomial_key)
    c = den[lead]
    if c != 1:
        num = {e: v / c for e, v in num.items()}
        den = {e: v / c for e, v in den.items()}
    return num, den


def _format_monomial(ring: PolyRing, exps: Exps) -> str:
    parts = []
    for name, k in zip(ring.names, exps):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _format_poly(ring: PolyRing, poly: Poly) -> str:
    if not poly:
        return "0"
    out: list[str] = []
    for e in sorted(poly, key=monomial_key, reverse=True):
        c = poly[e]
        mono = _format_monomial(ring, e)
        multi = isinstance(c, FieldElement) and c.nonzero_terms() > 1
        if multi:
            body = f"({format_scalar(c)})" + (f"*{mono}" if mono else "")
            negative = False
        else:
            text = format_scalar(c)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            if mono and text == "1":
                body = mono
            elif mono:
                body = f"{text}*{mono}"
            else:
                body = text
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(out)


ScalarLike = Union[int, Fraction, FieldElement, PolyElement]

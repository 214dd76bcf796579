"""
Cyclotomic fields Q(zeta_n) with exact rational coefficient vectors.

Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) reduced
modulo the n-th cyclotomic polynomial. For n = 1 and n = 2 the field is Q
itself and elements are plain Fractions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

import sympy as sp

from src.errors import FieldDivisionError, ShapeError

# Phi_n coefficients, lowest degree first.
CYCLOTOMIC_TABLE: dict[int, tuple[int, ...]] = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    7: (1, 1, 1, 1, 1, 1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    10: (1, -1, 1, -1, 1),
    11: (1,) * 11,
    12: (1, 0, -1, 0, 1),
}


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n (lowest first), from the table or from sympy."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    if n in CYCLOTOMIC_TABLE:
        return CYCLOTOMIC_TABLE[n]
    x = sp.Symbol("x")
    poly = sp.cyclotomic_poly(n, x, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _reduce(powers: Sequence[Fraction], modulus: Sequence[int]) -> list[Fraction]:
    """Reduce a coefficient list modulo a monic polynomial."""
    d = len(modulus) - 1
    work = [Fraction(c) for c in powers]
    for k in range(len(work) - 1, d - 1, -1):
        c = work[k]
        if c:
            shift = k - d
            for i in range(d + 1):
                work[shift + i] -= c * modulus[i]
    work = work[:d]
    work.extend([Fraction(0)] * (d - len(work)))
    return work


def _solve_dense(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular system by Gauss-Jordan elimination."""
    n = len(matrix)
    rows = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            raise FieldDivisionError("singular multiplication matrix")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


@dataclass(frozen=True)
class FieldSpec:
    """The field Q(zeta_n); `symbol` names the generator in serialized strings."""

    conductor: int = 1
    symbol: str = "z"

    def __post_init__(self):
        if self.conductor < 1:
            raise ValueError(f"conductor must be >= 1, got {self.conductor}")

    @property
    def modulus(self) -> tuple[int, ...]:
        return cyclotomic_coefficients(self.conductor)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def element(self, powers: Sequence) -> Union[Fraction, "FieldElement"]:
        """Build the element sum powers[k] * z^k, reduced."""
        reduced = _reduce([Fraction(c) for c in powers] or [Fraction(0)], self.modulus)
        if self.is_rational:
            return reduced[0]
        return FieldElement(self, tuple(reduced))

    def zero(self):
        return self.element([0])

    def one(self):
        return self.element([1])

    def zeta(self):
        return self.element([0, 1])

    def coerce(self, value):
        """Bring an int, Fraction or FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.field.conductor != self.conductor:
                raise ShapeError(
                    f"element of Q(zeta_{value.field.conductor}) used in Q(zeta_{self.conductor})"
                )
            return value
        if isinstance(value, (int, Fraction)):
            return self.element([value])
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def __str__(self) -> str:
        return "Q" if self.conductor == 1 else f"Q(zeta_{self.conductor})"


class FieldElement:
    """An element of Q(zeta_n) with n >= 3, immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: tuple[Fraction, ...]):
        if len(coeffs) != field.degree:
            raise ShapeError(f"expected {field.degree} coefficients, got {len(coeffs)}")
        self.field = field
        self.coeffs = coeffs

    # ---------- coercion ----------

    def _lift(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.field.conductor != self.field.conductor:
                raise ShapeError("mixed cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, (Fraction(other),) + (Fraction(0),) * (self.field.degree - 1))
        return None

    # ---------- arithmetic ----------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return FieldElement(self.field, tuple(_reduce(prod, self.field.modulus)))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self:
            raise FieldDivisionError(f"division by zero in {self.field}")
        d = self.field.degree
        columns = []
        power = self
        zeta = self.field.zeta()
        for _ in range(d):
            columns.append(power.coeffs)
            power = power * zeta
        matrix = [[columns[j][i] for j in range(d)] for i in range(d)]
        rhs = [Fraction(1)] + [Fraction(0)] * (d - 1)
        return FieldElement(self.field, tuple(_solve_dense(matrix, rhs)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise FieldDivisionError(f"division by zero in {self.field}")
            return FieldElement(self.field, tuple(a / other for a in self.coeffs))
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ---------- comparison ----------

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, FieldElement) else other
        if o is None:
            return NotImplemented
        return self.field.conductor == o.field.conductor and self.coeffs == o.coeffs

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.field.conductor, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def nonzero_terms(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"FieldElement({self.field}, {format_scalar(self)})"


def _format_fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def format_scalar(value) -> str:
    """Serialize a Fraction or FieldElement, e.g. '1/2 + 3/2*z^2'."""
    if isinstance(value, int):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return _format_fraction(value)
    symbol = value.field.symbol
    parts: list[str] = []
    for k, c in enumerate(value.coeffs):
        if not c:
            continue
        if k == 0:
            body = _format_fraction(abs(c))
        else:
            mono = symbol if k == 1 else f"{symbol}^{k}"
            body = mono if abs(c) == 1 else f"{_format_fraction(abs(c))}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def get_field(conductor: int = 1) -> FieldSpec:
    return FieldSpec(conductor)

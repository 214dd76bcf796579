"""
Words over the basis x_1..x_v and tensor elements built from them.

A word is a tuple of letter indices; tuple comparison is the lexicographic
order with x_1 < x_2 < ..., which every matrix and report uses.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from src.errors import InputError, ShapeError, SizeGuardError
from src.exactmath.cyclotomic import FieldSpec, format_scalar
from src.exactmath.polynomial import PolyElement, PolyRing
from src.exactmath.parsing import parse_any

Word = tuple[int, ...]

ALPHABET = "xyztuvwabcdefghijklmnopqrs"

DEFAULT_SIZE_GUARD = 10_000_000


def letter(i: int, dual: bool = False) -> str:
    if i >= len(ALPHABET):
        raise ShapeError(f"no letter for basis index {i}")
    return ALPHABET[i].upper() if dual else ALPHABET[i]


def word_to_str(word: Word, dual: bool = False) -> str:
    return "".join(letter(i, dual) for i in word)


def str_to_word(text: str, v: int) -> Word:
    """Parse 'xyy' (or the dual 'XYY') into a word over v letters."""
    out = []
    for ch in text.strip():
        idx = ALPHABET.find(ch.lower())
        if idx < 0 or idx >= v:
            raise InputError(f"letter '{ch}' is not a basis symbol for dim V = {v}")
        out.append(idx)
    return tuple(out)


def all_words(v: int, d: int) -> Iterator[Word]:
    return product(range(v), repeat=d)


@dataclass(frozen=True)
class GradedPiece:
    """V^(x)d with its lexicographic word basis."""

    v: int
    d: int
    size_guard: int = DEFAULT_SIZE_GUARD

    def __post_init__(self):
        if self.v < 1 or self.d < 0:
            raise ShapeError(f"invalid piece v={self.v}, d={self.d}")
        if self.v ** self.d > self.size_guard:
            raise SizeGuardError(
                f"V^(x){self.d} with dim V = {self.v} has {self.v ** self.d} words, "
                f"above the guard of {self.size_guard}"
            )

    @property
    def dimension(self) -> int:
        return self.v ** self.d

    def words(self) -> Iterator[Word]:
        return all_words(self.v, self.d)

    def index(self, word: Word) -> int:
        if len(word) != self.d:
            raise ShapeError(f"word {word} is not in degree {self.d}")
        out = 0
        for i in word:
            out = out * self.v + i
        return out


def concat(u: dict, w: dict) -> dict:
    """Tensor product of two word vectors."""
    out: dict = {}
    for a, ca in u.items():
        for b, cb in w.items():
            c = ca * cb
            if c:
                key = a + b
                nc = out.get(key, 0) + c
                if nc:
                    out[key] = nc
                else:
                    out.pop(key, None)
    return out


def letter_vec(i: int) -> dict:
    return {(i,): Fraction(1)}


def is_symbolic(vec: dict) -> bool:
    return any(isinstance(c, PolyElement) and not c.is_constant for c in vec.values())


def numeric(vec: dict) -> dict:
    """Replace constant PolyElements by field scalars."""
    return {w: (c.constant_value() if isinstance(c, PolyElement) else c) for w, c in vec.items()}


@dataclass
class TensorElement:
    """A homogeneous element of V^(x)d with scalar or polynomial coefficients."""

    v: int
    degree: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        for w in self.terms:
            if len(w) != self.degree or any(i >= self.v for i in w):
                raise ShapeError(f"word {w} does not live in V^(x){self.degree}, dim V = {self.v}")
        self.terms = {w: c for w, c in self.terms.items() if c}

    @classmethod
    def from_pairs(cls, pairs: Sequence, v: int, field_: FieldSpec, ring: PolyRing | None = None,
                   degree: int | None = None) -> "TensorElement":
        """Read [[word, coeff], ...]; repeated words accumulate."""
        terms: dict = {}
        for word_text, coeff_text in pairs:
            word = str_to_word(word_text, v)
            if degree is None:
                degree = len(word)
            elif len(word) != degree:
                raise ShapeError(f"mixed degrees in tensor element: '{word_text}' is not degree {degree}")
            value = parse_any(coeff_text, field_, ring)
            nc = terms.get(word, 0) + value
            if nc:
                terms[word] = nc
            else:
                terms.pop(word, None)
        return cls(v, degree or 0, terms)

    def to_pairs(self, dual: bool = False) -> list[list[str]]:
        return [[word_to_str(w, dual), format_coeff(c)] for w, c in sorted(self.terms.items())]

    def __bool__(self):
        return bool(self.terms)


def format_coeff(c) -> str:
    if isinstance(c, PolyElement):
        return str(c)
    return format_scalar(c)


def vec_to_pairs(vec: dict, dual: bool = False) -> list[list[str]]:
    return [[word_to_str(w, dual), format_coeff(c)] for w, c in sorted(vec.items())]

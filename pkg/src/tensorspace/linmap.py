"""
Linear maps between graded pieces, and the tensor-operator algebra built
from them (identities, tensor products, sums, composites).

A LinMap stores the image of every domain basis key; keys missing from
`images` map to zero. Domains are either a piece (keys are words) or a
relation basis (keys are relation indices, `domain_degree` is None).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional, Sequence, Union

from src.errors import OverlapError, ShapeError
from src.exactmath.linear import add_scaled, combine
from src.tensorspace.subspace import Subspace
from src.tensorspace.words import GradedPiece, Word, all_words, concat


@dataclass
class LinMap:
    images: dict
    codomain_degree: int
    domain_degree: Optional[int] = None

    def __post_init__(self):
        for key, img in self.images.items():
            for w in img:
                if len(w) != self.codomain_degree:
                    raise ShapeError(f"image of {key} has word {w}, expected degree {self.codomain_degree}")
            if self.domain_degree is not None and len(key) != self.domain_degree:
                raise ShapeError(f"domain key {key} is not a word of degree {self.domain_degree}")
        self.images = {k: img for k, img in self.images.items() if img}

    def apply(self, vec: dict) -> dict:
        return combine((c, self.images[k]) for k, c in vec.items() if k in self.images)

    def image(self, key) -> dict:
        return self.images.get(key, {})

    def is_zero(self) -> bool:
        return not self.images

    @property
    def domain_width(self) -> int:
        if self.domain_degree is None:
            raise ShapeError("a map on a relation basis has no tensor width")
        return self.domain_degree

    @property
    def codomain_width(self) -> int:
        return self.codomain_degree


def identity_map(v: int, degree: int) -> LinMap:
    GradedPiece(v, degree)
    return LinMap({w: {w: Fraction(1)} for w in all_words(v, degree)}, degree, degree)


def map_compose(f: LinMap, g: LinMap) -> LinMap:
    """f after g."""
    if f.domain_degree is None or f.domain_degree != g.codomain_degree:
        raise ShapeError(f"cannot compose: g lands in degree {g.codomain_degree}, f starts at {f.domain_degree}")
    return LinMap({k: f.apply(img) for k, img in g.images.items()}, f.codomain_degree, g.domain_degree)


def map_tensor(f: LinMap, g: LinMap) -> LinMap:
    if f.domain_degree is None or g.domain_degree is None:
        raise ShapeError("tensor products need maps defined on pieces")
    images = {}
    for u, fu in f.images.items():
        for w, gw in g.images.items():
            images[u + w] = concat(fu, gw)
    return LinMap(images, f.codomain_degree + g.codomain_degree, f.domain_degree + g.domain_degree)


def map_restrict(f: LinMap, U: Subspace) -> LinMap:
    """f on the basis of U, keyed by basis position."""
    if f.domain_degree != U.degree:
        raise ShapeError(f"subspace of degree {U.degree} is not inside the domain of degree {f.domain_degree}")
    return LinMap({i: f.apply(b) for i, b in enumerate(U.basis())}, f.codomain_degree, None)


# ---------- tensor operators ----------

Factor = Union[int, "Operator"]


class Operator:
    """A linear map V^(x)a -> V^(x)b that can be applied to word vectors."""

    domain_width: int
    codomain_width: int

    def apply(self, vec: dict) -> dict:
        raise NotImplementedError

    @property
    def shape(self) -> tuple[int, int]:
        return (self.domain_width, self.codomain_width)

    def apply_word(self, word: Word) -> dict:
        return self.apply({word: Fraction(1)})

    def __add__(self, other: "Operator") -> "OperatorSum":
        return OperatorSum([(Fraction(1), self), (Fraction(1), other)], self.shape)

    def __sub__(self, other: "Operator") -> "OperatorSum":
        return OperatorSum([(Fraction(1), self), (Fraction(-1), other)], self.shape)

    def __rmul__(self, scale) -> "OperatorSum":
        return OperatorSum([(scale, self)], self.shape)


class WordMap(Operator):
    """An operator given by a function word -> vector, e.g. an alternating form."""

    def __init__(self, fn: Callable[[Word], dict], domain_width: int, codomain_width: int):
        self.fn = fn
        self.domain_width = domain_width
        self.codomain_width = codomain_width
        self._cache: dict = {}

    def apply_word(self, word: Word) -> dict:
        if word not in self._cache:
            self._cache[word] = self.fn(word)
        return self._cache[word]

    def apply(self, vec: dict) -> dict:
        return combine((c, self.apply_word(w)) for w, c in vec.items())


class PieceMap(Operator):
    """Wraps a LinMap on a piece."""

    def __init__(self, linmap: LinMap):
        if linmap.domain_degree is None:
            raise ShapeError("only maps on pieces can act on tensors")
        self.linmap = linmap
        self.domain_width = linmap.domain_degree
        self.codomain_width = linmap.codomain_degree

    def apply(self, vec: dict) -> dict:
        return self.linmap.apply(vec)

    def apply_word(self, word: Word) -> dict:
        return self.linmap.image(word)


class TensorProduct(Operator):
    """f_1 (x) f_2 (x) ...; an int factor k stands for the identity on V^(x)k."""

    def __init__(self, factors: Sequence[Factor], coeff=Fraction(1)):
        self.factors = [f for f in factors if not (isinstance(f, int) and f == 0)]
        self.coeff = coeff
        self.domain_width = sum(f if isinstance(f, int) else f.domain_width for f in self.factors)
        self.codomain_width = sum(f if isinstance(f, int) else f.codomain_width for f in self.factors)

    def apply_word(self, word: Word) -> dict:
        if len(word) != self.domain_width:
            raise ShapeError(f"word of length {len(word)} fed to an operator of width {self.domain_width}")
        out = {(): self.coeff}
        pos = 0
        for f in self.factors:
            if isinstance(f, int):
                piece = word[pos:pos + f]
                out = {w + piece: c for w, c in out.items()}
                pos += f
            else:
                img = f.apply_word(word[pos:pos + f.domain_width])
                pos += f.domain_width
                if not img:
                    return {}
                out = concat(out, img)
        return out

    def apply(self, vec: dict) -> dict:
        return combine((c, self.apply_word(w)) for w, c in vec.items())


class OperatorSum(Operator):
    def __init__(self, terms: Sequence[tuple], widths: Optional[tuple[int, int]] = None):
        self.terms = [(c, op) for c, op in terms if c]
        shapes = {(op.domain_width, op.codomain_width) for _, op in self.terms}
        if widths is not None:
            shapes.add(tuple(widths))
        if len(shapes) != 1:
            raise ShapeError(f"summands have different or unknown shapes: {sorted(shapes)}")
        self.domain_width, self.codomain_width = shapes.pop()

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for c, op in self.terms:
            add_scaled(out, op.apply(vec), c)
        return out

    def apply_word(self, word: Word) -> dict:
        return self.apply({word: Fraction(1)})


class Composite(Operator):
    """outer after inner."""

    def __init__(self, outer: Operator, inner: Operator):
        if outer.domain_width != inner.codomain_width:
            raise ShapeError(f"cannot compose widths {inner.codomain_width} -> {outer.domain_width}")
        self.outer = outer
        self.inner = inner
        self.domain_width = inner.domain_width
        self.codomain_width = outer.codomain_width

    def apply(self, vec: dict) -> dict:
        return self.outer.apply(self.inner.apply(vec))

    def apply_word(self, word: Word) -> dict:
        return self.outer.apply(self.inner.apply_word(word))


def tensor(*factors: Factor) -> Operator:
    """Tensor product distributing over OperatorSum factors."""
    expanded: list[tuple] = [(Fraction(1), [])]
    for f in factors:
        if isinstance(f, OperatorSum):
            expanded = [(c * d, fs + [op]) for c, fs in expanded for d, op in f.terms]
        elif isinstance(f, TensorProduct):
            expanded = [(c * f.coeff, fs + list(f.factors)) for c, fs in expanded]
        else:
            expanded = [(c, fs + [f]) for c, fs in expanded]
    widths = (
        sum(f if isinstance(f, int) else f.domain_width for f in factors),
        sum(f if isinstance(f, int) else f.codomain_width for f in factors),
    )
    terms = [(Fraction(1), TensorProduct(fs, c)) for c, fs in expanded]
    if len(terms) == 1:
        return terms[0][1]
    return OperatorSum(terms, widths)


def operator_on_relations(op: Operator, relations: Sequence[dict]) -> LinMap:
    """The LinMap r_j -> op(r_j) keyed by relation index."""
    return LinMap({j: op.apply(r) for j, r in enumerate(relations)}, op.codomain_width, None)


# ---------- brackets on the overlap space ----------

def first_letter_slices(vec: dict) -> dict[int, dict]:
    """vec = sum_i x_i (x) rho_i; returns {i: rho_i}."""
    out: dict[int, dict] = {}
    for w, c in vec.items():
        out.setdefault(w[0], {})[w[1:]] = c
    return out


def last_letter_slices(vec: dict) -> dict[int, dict]:
    """vec = sum_i lambda_i (x) x_i; returns {i: lambda_i}."""
    out: dict[int, dict] = {}
    for w, c in vec.items():
        out.setdefault(w[-1], {})[w[:-1]] = c
    return out


def relation_coordinates(R: Subspace, vec: dict) -> dict:
    """Coordinates of vec in the tracked relation basis of R."""
    coords = R.coordinates(vec)
    if coords is None:
        raise OverlapError(f"slice {vec} of an overlap vector is not in R")
    return coords


def bracket_vector(alpha: LinMap, R: Subspace, w: dict, sign=-1) -> dict:
    """1 (x) alpha + sign * alpha (x) 1 on one overlap vector."""
    out: dict = {}
    for i, rho in first_letter_slices(w).items():
        img = alpha.apply(relation_coordinates(R, rho))
        add_scaled(out, {(i,) + u: c for u, c in img.items()}, 1)
    for i, lam in last_letter_slices(w).items():
        img = alpha.apply(relation_coordinates(R, lam))
        add_scaled(out, {u + (i,): c for u, c in img.items()}, sign)
    return out


def bracket(alpha: LinMap, overlap: Subspace, R: Subspace) -> LinMap:
    """[1, alpha] = 1 (x) alpha - alpha (x) 1 on the overlap basis."""
    return LinMap({j: bracket_vector(alpha, R, w) for j, w in enumerate(overlap.basis())},
                  alpha.codomain_degree + 1, None)


def brace(alpha: LinMap, overlap: Subspace, R: Subspace, s: int) -> LinMap:
    """{1, alpha} = 1 (x) alpha + (-1)^s alpha (x) 1 on the overlap basis."""
    sign = -1 if s % 2 else 1
    return LinMap({j: bracket_vector(alpha, R, w, sign) for j, w in enumerate(overlap.basis())},
                  alpha.codomain_degree + 1, None)


def interleavings(a: int, b: int) -> list[tuple[bool, ...]]:
    """All arrangements of a identity-pair blocks (False) and b copies of L (True)."""
    out = []
    for positions in combinations(range(a + b), b):
        chosen = set(positions)
        out.append(tuple(k in chosen for k in range(a + b)))
    return out

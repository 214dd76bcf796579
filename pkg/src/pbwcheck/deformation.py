"""
The data of a non-homogeneous algebra U = T(V)/(P), with
P = {r + alpha_1(r) + ... + alpha_N(r) : r in R}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from src.errors import ShapeError
from src.exactmath.cyclotomic import FieldSpec, get_field
from src.exactmath.linear import combine
from src.exactmath.polynomial import PolyRing
from src.tensorspace.linmap import LinMap
from src.tensorspace.subspace import Subspace, subspace_from_vectors
from src.tensorspace.words import is_symbolic, numeric


@dataclass
class DeformationData:
    """alpha[i - 1] is alpha_i, a LinMap keyed by relation index with codomain degree N - i."""

    v: int
    N: int
    relations: list[dict]
    alpha: list[LinMap] = field(default_factory=list)
    field_spec: FieldSpec = field(default_factory=get_field)
    ring: Optional[PolyRing] = None
    R: Subspace = field(init=False)

    def __post_init__(self):
        if self.N < 2:
            raise ShapeError(f"N must be at least 2, got {self.N}")
        if not self.relations:
            raise ShapeError("at least one relation is required")
        self.R = subspace_from_vectors(self.relations, self.v, self.N, track=True)
        if self.R.dim != len(self.relations):
            raise ShapeError(f"the {len(self.relations)} relations span only {self.R.dim} dimensions")
        if len(self.alpha) > self.N:
            raise ShapeError(f"{len(self.alpha)} alpha maps given, at most N = {self.N} allowed")
        maps = list(self.alpha)
        while len(maps) < self.N:
            maps.append(LinMap({}, self.N - len(maps) - 1))
        for i, m in enumerate(maps, start=1):
            if m.codomain_degree != self.N - i:
                raise ShapeError(f"alpha_{i} lands in degree {m.codomain_degree}, expected {self.N - i}")
            if m.domain_degree is not None:
                raise ShapeError(f"alpha_{i} must be keyed by relation index")
            for j in m.images:
                if not 0 <= j < len(self.relations):
                    raise ShapeError(f"alpha_{i} has an image for relation {j}, only {len(self.relations)} exist")
        self.alpha = maps

    @classmethod
    def from_images(cls, v: int, N: int, relations: Sequence[dict], images: dict[int, Sequence[dict]],
                    field_: Optional[FieldSpec] = None, ring: Optional[PolyRing] = None) -> "DeformationData":
        """images[i][j] = alpha_i(r_j) as a word vector."""
        alpha = []
        for i in range(1, N + 1):
            rows = images.get(i, [])
            alpha.append(LinMap({j: dict(img) for j, img in enumerate(rows) if img}, N - i))
        return cls(v=v, N=N, relations=[dict(r) for r in relations], alpha=alpha,
                   field_spec=field_ or get_field(1), ring=ring)

    @property
    def symbolic(self) -> bool:
        return any(is_symbolic(img) for m in self.alpha for img in m.images.values())

    @property
    def augmented(self) -> bool:
        return self.alpha[self.N - 1].is_zero()

    @property
    def dim_R(self) -> int:
        return len(self.relations)

    def alpha_map(self, i: int) -> LinMap:
        """alpha_i for 1 <= i <= N + 1; alpha_(N+1) = 0."""
        if i == self.N + 1:
            return LinMap({}, -1)
        if not 1 <= i <= self.N:
            raise ShapeError(f"alpha_{i} is not defined for N = {self.N}")
        return self.alpha[i - 1]

    def alpha_on(self, i: int, vec: dict) -> dict:
        """alpha_i of an element of R given as a word vector."""
        coords = self.R.coordinates(vec)
        if coords is None:
            raise ShapeError(f"{vec} is not in R")
        return self.alpha_map(i).apply(coords)

    def relation_with_tails(self, j: int) -> dict:
        """r_j + alpha_1(r_j) + ... + alpha_N(r_j), a vector over words of mixed length."""
        if not 0 <= j < len(self.relations):
            raise ShapeError(f"no relation with index {j}")
        return combine([(Fraction(1), self.relations[j])] + [(Fraction(1), m.image(j)) for m in self.alpha])

    def numeric_tails(self) -> list[dict]:
        """All relations with tails; raises if alpha has free parameters."""
        if self.symbolic:
            raise ShapeError("the deformation has free parameters; specialize it first")
        return [numeric(self.relation_with_tails(j)) for j in range(len(self.relations))]

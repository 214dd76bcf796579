"""
The cubic Artin-Schelter families on V = <x, y>, read from
config/as_families.json.

Each family has two relations f, g of degree 3 and a generator w of
(V (x) R) n (R (x) V), given twice: as sum letter * relation (left) and as
sum relation * letter (right). A branch fixes some family parameters, for
instance alpha = 1 in S1, and keeps the others symbolic.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from pydantic import ValidationError

from src.errors import InputError, ShapeError
from src.exactmath.cyclotomic import FieldSpec, get_field
from src.exactmath.linear import add_scaled, combine
from src.exactmath.parsing import parse_poly, parse_scalar
from src.exactmath.polynomial import PolyElement, PolyRing
from src.models import ASCatalog
from src.tensorspace.subspace import subspace_from_vectors, subspace_intersect, tensor_subspace
from src.tensorspace.words import numeric, str_to_word
from src.utils.paths import get_config_dir

V_DIM = 2
DEGREE = 3
RELATIONS = ("f", "g")
PARAMETERS = ("beta", "gamma")

# coefficients of alpha_i(f) are a.., of alpha_i(g) b.., in lex order of the image words
STAGE_UNKNOWNS: dict[int, list[str]] = {
    1: ["a11", "a12", "a13", "a14", "b11", "b12", "b13", "b14"],
    2: ["a21", "a22", "b21", "b22"],
    3: ["a3", "b3"],
}
ALL_UNKNOWNS = [u for stage in sorted(STAGE_UNKNOWNS) for u in STAGE_UNKNOWNS[stage]]


@dataclass
class ASFamily:
    tag: str
    family: str
    field: FieldSpec
    ring: PolyRing
    parameters: list[str]  # family parameters left symbolic
    specialization: dict
    relations: dict[str, dict]  # "f", "g" -> word vector with PolyElement coefficients
    w: dict
    left: list[tuple[int, str, PolyElement]]
    right: list[tuple[str, int, PolyElement]]
    sample: dict = field(default_factory=dict)
    stage4_zero: bool = False
    warnings: list[str] = field(default_factory=list)

    @property
    def symbolic(self) -> bool:
        return bool(self.parameters)


# ---------- catalog ----------

@lru_cache(maxsize=1)
def load_catalog() -> ASCatalog:
    path = get_config_dir() / "as_families.json"
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise InputError(f"{path} not found") from None
    try:
        return ASCatalog.model_validate(data)
    except ValidationError as e:
        err = e.errors()[0]
        raise InputError(err["msg"], path="as_families." + ".".join(str(p) for p in err["loc"])) from None


def family_tags() -> list[str]:
    return list(load_catalog().branches)


# ---------- construction ----------

def _poly(text, ring: PolyRing, path: str) -> PolyElement:
    try:
        return parse_poly(text, ring)
    except InputError as e:
        raise InputError(str(e), path=path) from None


def _vector(pairs, ring: PolyRing, path: str) -> dict:
    out: dict = {}
    for k, (word_text, coeff) in enumerate(pairs):
        word = str_to_word(str(word_text), V_DIM)
        if len(word) != DEGREE:
            raise InputError(f"'{word_text}' is not a cubic word", path=f"{path}.{k}")
        add_scaled(out, {word: _poly(coeff, ring, f"{path}.{k}.1")}, 1)
    return out


def _letter(text, path: str) -> int:
    word = str_to_word(str(text), V_DIM)
    if len(word) != 1:
        raise InputError(f"'{text}' is not a single letter", path=path)
    return word[0]


def _relation(text, path: str) -> str:
    if text not in RELATIONS:
        raise InputError(f"'{text}' is not one of {list(RELATIONS)}", path=path)
    return str(text)


def expand_left(fam: ASFamily) -> dict:
    return combine((c, {(i,) + u: x for u, x in fam.relations[rel].items()}) for i, rel, c in fam.left)


def expand_right(fam: ASFamily) -> dict:
    return combine((c, {u + (i,): x for u, x in fam.relations[rel].items()}) for rel, i, c in fam.right)


def _check_overlap(fam: ASFamily, values: dict) -> None:
    """span{w} = (V (x) R) n (R (x) V), with the symbolic parameters set to `values`."""
    f, g, w = (numeric({u: c.substitute(values) for u, c in vec.items()})
               for vec in (fam.relations["f"], fam.relations["g"], fam.w))
    R = subspace_from_vectors([f, g], V_DIM, DEGREE)
    if R.dim != 2:
        raise ShapeError(f"{fam.tag}: f and g are dependent at {values or 'the given values'}")
    W = subspace_intersect(tensor_subspace(R, 1, 0), tensor_subspace(R, 0, 1))
    if not W.contains(w):
        raise ShapeError(f"{fam.tag}: w is not in (V (x) R) n (R (x) V)")
    if W.dim != 1:
        message = f"{fam.tag}: the overlap space has dimension {W.dim} at {values}"
        if not fam.symbolic:
            raise ShapeError(message)
        logging.warning(message)
        fam.warnings.append(message)


@lru_cache(maxsize=None)
def family_data(tag: str) -> ASFamily:
    """Parse one branch, check that both expressions of w agree and that w spans the overlap space."""
    catalog = load_catalog()
    if tag not in catalog.branches:
        raise InputError(f"unknown family '{tag}' (known: {', '.join(catalog.branches)})", path="family")
    branch = catalog.branches[tag]
    if branch.family not in catalog.families:
        raise InputError(f"branch {tag} names unknown family '{branch.family}'", path=f"branches.{tag}.family")
    doc = catalog.families[branch.family]
    field_ = get_field(doc.field.conductor)
    ring = PolyRing(field_, tuple(doc.parameters) + PARAMETERS + tuple(ALL_UNKNOWNS))
    base = f"families.{branch.family}"

    unknown = set(branch.specialization) - set(doc.parameters)
    if unknown:
        raise InputError(f"specialization of unknown parameters {sorted(unknown)}", path=f"branches.{tag}")
    fixed = {name: parse_scalar(value, field_) for name, value in branch.specialization.items()}

    def specialized(x: PolyElement) -> PolyElement:
        return x.substitute(fixed)

    relations = {
        rel: {u: specialized(c) for u, c in _vector(getattr(doc, rel), ring, f"{base}.{rel}").items()}
        for rel in RELATIONS
    }
    relations = {rel: {u: c for u, c in vec.items() if c} for rel, vec in relations.items()}
    left = [(_letter(a, f"{base}.left.{k}.0"), _relation(r, f"{base}.left.{k}.1"),
             specialized(_poly(c, ring, f"{base}.left.{k}.2")))
            for k, (a, r, c) in enumerate(doc.left)]
    right = [(_relation(r, f"{base}.right.{k}.0"), _letter(a, f"{base}.right.{k}.1"),
              specialized(_poly(c, ring, f"{base}.right.{k}.2")))
             for k, (r, a, c) in enumerate(doc.right)]
    fam = ASFamily(
        tag=tag, family=branch.family, field=field_, ring=ring,
        parameters=[p for p in doc.parameters if p not in fixed], specialization=fixed,
        relations=relations, w={}, left=left, right=right,
        sample={name: parse_scalar(value, field_) for name, value in branch.sample.items()},
        stage4_zero=branch.stage4_zero,
    )
    fam.w = expand_left(fam)
    if combine([(1, fam.w), (-1, expand_right(fam))]):
        raise ShapeError(f"{tag}: the left and right expressions of w differ")

    if fam.symbolic:
        missing = set(fam.parameters) - set(fam.sample)
        if missing:
            raise InputError(f"no sample values for {sorted(missing)}", path=f"branches.{tag}.sample")
        _check_overlap(fam, {p: fam.sample[p] for p in fam.parameters})
    else:
        _check_overlap(fam, {})
    logging.info(f"AS family {tag}: {branch.family} over {field_}, parameters {fam.parameters}")
    return fam


def numeric_relations(fam: ASFamily, values: Optional[dict] = None) -> list[dict]:
    """f and g with the family parameters set to `values`."""
    values = values or {}
    return [numeric({u: c.substitute(values) for u, c in fam.relations[rel].items()}) for rel in RELATIONS]

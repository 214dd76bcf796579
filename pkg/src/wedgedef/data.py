"""
Input documents for the wedge constructions.

Forms and brackets are given by labeled coefficients on increasing index
tuples: {"xy": "1", "zt": "-2"} for a 2-form, {"xy": {"z": "1"}} for a
bracket, {"x": "3"} for a linear form.
"""
from __future__ import annotations
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.errors import InputError
from src.exactmath.cyclotomic import FieldSpec, get_field
from src.exactmath.parsing import parse_scalar
from src.models import FieldDoc, Scalar
from src.tensorspace.exterior import ExteriorMap, is_increasing
from src.tensorspace.words import str_to_word


class FormDoc(BaseModel):
    """An alternating form wedge^degree V -> k."""
    degree: int = Field(ge=1)
    coefficients: Dict[str, Scalar] = Field(default_factory=dict)
    model_config = ConfigDict(extra="forbid")


class OddNData(BaseModel):
    field: FieldDoc = Field(default_factory=FieldDoc)
    v: int = Field(ge=1, le=26)
    N: int = Field(ge=3)
    l: Dict[str, Scalar] = Field(default_factory=dict)  # letter -> coefficient
    forms: List[FormDoc] = Field(default_factory=list)  # Phi_2r for 2 <= 2r < N
    allow_small_v: bool = False
    model_config = ConfigDict(extra="forbid")

    @field_validator("N")
    @classmethod
    def _odd(cls, v: int) -> int:
        if v % 2 == 0:
            raise ValueError("N must be odd")
        return v

    @model_validator(mode="after")
    def _form_degrees(self) -> "OddNData":
        _check_forms(self.forms, self.N)
        return self


class EvenNData(BaseModel):
    field: FieldDoc = Field(default_factory=FieldDoc)
    v: int = Field(ge=1, le=26)
    N: int = Field(ge=2)
    L: Dict[str, Dict[str, Scalar]] = Field(default_factory=dict)  # "xy" -> {"z": "1"}
    forms: List[FormDoc] = Field(default_factory=list)  # Phi_2r for 2 <= 2r < N
    top_form: Optional[FormDoc] = None  # Phi_N, making alpha_N nonzero
    allow_small_v: bool = False
    model_config = ConfigDict(extra="forbid")

    @field_validator("N")
    @classmethod
    def _even(cls, v: int) -> int:
        if v % 2:
            raise ValueError("N must be even")
        return v

    @model_validator(mode="after")
    def _form_degrees(self) -> "EvenNData":
        _check_forms(self.forms, self.N)
        if self.top_form is not None and self.top_form.degree != self.N:
            raise ValueError(f"top_form must have degree N = {self.N}")
        return self


def _check_forms(forms: List[FormDoc], N: int) -> None:
    seen = set()
    for f in forms:
        if f.degree % 2 or not 2 <= f.degree < N:
            raise ValueError(f"form degree {f.degree} must be even with 2 <= 2r < N = {N}")
        if f.degree in seen:
            raise ValueError(f"two forms of degree {f.degree}")
        seen.add(f.degree)


# ---------- conversion ----------

def _index(label: str, v: int, size: int, path: str) -> tuple[int, ...]:
    index = str_to_word(label, v)
    if len(index) != size or not is_increasing(index):
        raise InputError(f"'{label}' is not an increasing {size}-letter label", path=path)
    return index


def field_of(doc) -> FieldSpec:
    return get_field(doc.field.conductor)


def form_map(doc: FormDoc, v: int, field: FieldSpec, path: str = "forms") -> ExteriorMap:
    images = {}
    for label, value in doc.coefficients.items():
        c = parse_scalar(value, field)
        if c:
            images[_index(label, v, doc.degree, f"{path}.{label}")] = {(): c}
    return ExteriorMap(v, doc.degree, 0, images)


def linear_form_map(coeffs: Dict[str, Scalar], v: int, field: FieldSpec) -> ExteriorMap:
    images = {}
    for label, value in coeffs.items():
        c = parse_scalar(value, field)
        if c:
            images[_index(label, v, 1, f"l.{label}")] = {(): c}
    return ExteriorMap(v, 1, 0, images)


def bracket_map(coeffs: Dict[str, Dict[str, Scalar]], v: int, field: FieldSpec) -> ExteriorMap:
    images = {}
    for label, target in coeffs.items():
        P = _index(label, v, 2, f"L.{label}")
        img = {}
        for letter, value in target.items():
            c = parse_scalar(value, field)
            if c:
                img[_index(letter, v, 1, f"L.{label}.{letter}")] = c
        if img:
            images[P] = img
    return ExteriorMap(v, 2, 1, images)


def top_form_of(doc: EvenNData, field: FieldSpec) -> Optional[ExteriorMap]:
    if doc.top_form is None:
        return None
    return form_map(doc.top_form, doc.v, field, path="top_form")


def forms_by_degree(forms: List[FormDoc], v: int, field: FieldSpec) -> dict[int, ExteriorMap]:
    return {f.degree: form_map(f, v, field, path=f"forms.{i}") for i, f in enumerate(forms)}

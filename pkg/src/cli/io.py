"""
Reading algebra documents and writing reports.

An algebra document is a DeformationDocument in JSON. Each alpha matrix is
row-major: row j is alpha_i(r_j) over all words of length N - degree_drop
in lexicographic order. Every error names the offending field, e.g.
"alpha.0.matrix.1".
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional, Type, TypeVar

from pydantic import BaseModel, ValidationError

from src.errors import InputError, ShapeError, SizeGuardError
from src.exactmath.cyclotomic import get_field
from src.exactmath.parsing import parse_any
from src.exactmath.polynomial import PolyRing
from src.models import AlphaDoc, DeformationDocument, FieldDoc
from src.pbwcheck.deformation import DeformationData
from src.tensorspace.words import GradedPiece, TensorElement, format_coeff, vec_to_pairs
from src.utils.settings import get_settings

ModelT = TypeVar("ModelT", bound=BaseModel)


def _loc(err: dict) -> str:
    return ".".join(str(p) for p in err["loc"])


def read_json(path: Path) -> object:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise InputError(f"{path} not found") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e.msg}", path=f"line {e.lineno}") from None


def load_model(path: Path, model: Type[ModelT]) -> ModelT:
    """Validate a JSON file into a pydantic model; validation errors keep their field path."""
    data = read_json(path)
    try:
        return model.model_validate(data)
    except ValidationError as e:
        err = e.errors()[0]
        raise InputError(err["msg"], path=_loc(err)) from None


def load_document(path: Path) -> DeformationDocument:
    return load_model(path, DeformationDocument)


# ---------- document -> deformation ----------

def document_to_data(doc: DeformationDocument, conductor: Optional[int] = None) -> DeformationData:
    """Build the deformation a document describes; `conductor` overrides the document's field."""
    field = get_field(conductor if conductor is not None else doc.field.conductor)
    ring = PolyRing(field, tuple(doc.parameters)) if doc.parameters else None
    guard = get_settings().size_guard

    relations = []
    for j, pairs in enumerate(doc.relations):
        try:
            element = TensorElement.from_pairs(pairs, doc.v, field, degree=doc.N)
        except (InputError, ShapeError) as e:
            raise InputError(str(e), path=f"relations.{j}") from None
        if not element:
            raise InputError("relation is zero", path=f"relations.{j}")
        relations.append(element.terms)

    images: dict[int, list[dict]] = {}
    for k, alpha in enumerate(doc.alpha):
        path = f"alpha.{k}"
        i = alpha.degree_drop
        if i > doc.N:
            raise InputError(f"degree_drop {i} exceeds N = {doc.N}", path=f"{path}.degree_drop")
        if i in images:
            raise InputError(f"alpha_{i} is given twice", path=f"{path}.degree_drop")
        try:
            piece = GradedPiece(doc.v, doc.N - i, size_guard=guard)
        except SizeGuardError as e:
            raise InputError(str(e), path=path) from None
        words = list(piece.words())
        if len(alpha.matrix) != len(relations):
            raise InputError(f"{len(alpha.matrix)} rows, expected one per relation ({len(relations)})",
                             path=f"{path}.matrix")
        rows = []
        for j, row in enumerate(alpha.matrix):
            if len(row) != len(words):
                raise InputError(f"{len(row)} entries, expected {len(words)} words of length {doc.N - i}",
                                 path=f"{path}.matrix.{j}")
            image = {}
            for w, entry in zip(words, row):
                try:
                    c = parse_any(entry, field, ring)
                except InputError as e:
                    raise InputError(str(e), path=f"{path}.matrix.{j}") from None
                if c:
                    image[w] = c
            rows.append(image)
        images[i] = rows

    try:
        data = DeformationData.from_images(doc.v, doc.N, relations, images, field_=field, ring=ring)
    except ShapeError as e:
        raise InputError(str(e), path="relations") from None
    logging.info(f"Loaded algebra v={doc.v}, N={doc.N}, dim R={data.dim_R}, "
                 f"alpha degrees {sorted(images)}{' (symbolic)' if data.symbolic else ''}")
    return data


# ---------- deformation -> document ----------

def alpha_docs(data: DeformationData) -> list[AlphaDoc]:
    out = []
    for i in range(1, data.N + 1):
        m = data.alpha_map(i)
        if m.is_zero():
            continue
        words = list(GradedPiece(data.v, data.N - i).words())
        matrix = [[format_coeff(m.image(j).get(w, 0)) for w in words] for j in range(data.dim_R)]
        out.append(AlphaDoc(degree_drop=i, matrix=matrix))
    return out


def data_to_document(data: DeformationData, description: Optional[str] = None) -> DeformationDocument:
    parameters = list(data.ring.names) if data.ring is not None and data.symbolic else []
    return DeformationDocument(
        field=FieldDoc(conductor=data.field_spec.conductor), v=data.v, N=data.N,
        relations=[vec_to_pairs(r) for r in data.relations], alpha=alpha_docs(data),
        parameters=parameters, description=description,
    )


# ---------- reports ----------

def dump_report(report: BaseModel) -> str:
    return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_report(report: BaseModel, path: Path) -> Path:
    """Write atomically: a temporary file next to the target, then os.replace."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with tempfile.NamedTemporaryFile("w", encoding="utf-8", dir=path.parent, prefix=f".{path.name}.",
                                     suffix=".tmp", delete=False) as f:
        f.write(dump_report(report))
        tmp = f.name
    os.replace(tmp, path)
    logging.info(f"Report written to {path}")
    return path

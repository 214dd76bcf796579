"""
Reference tables for the AS families (config/as_reference_tables.json),
numeric specialization of a solved table, and the per-family report.
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Iterable, Optional

from pydantic import ValidationError

from src.errors import InputError
from src.exactmath.parsing import parse_poly, parse_scalar
from src.models import ASReferenceCatalog, ASReferenceDoc, ASReport, ComparisonReport, RelationStatus, combine_verdicts
from src.pbwcheck.deformation import DeformationData
from src.artinschelter.equations import unknown_layout
from src.artinschelter.families import DEGREE, RELATIONS, V_DIM, ASFamily, family_data, numeric_relations
from src.artinschelter.solver import SolvedTable, generic_point, staged_solve, verify_table
from src.utils.paths import get_config_dir
from src.utils.settings import max_threads


@lru_cache(maxsize=1)
def load_references() -> ASReferenceCatalog:
    path = get_config_dir() / "as_reference_tables.json"
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise InputError(f"{path} not found") from None
    try:
        return ASReferenceCatalog.model_validate(data)
    except ValidationError as e:
        err = e.errors()[0]
        raise InputError(err["msg"], path="as_reference_tables." + ".".join(str(p) for p in err["loc"])) from None


# ---------- comparison ----------

def _compare_table(fam: ASFamily, ref: ASReferenceDoc, table: SolvedTable) -> ComparisonReport:
    solved = table.bindings()
    mismatches = []
    for name, text in ref.entries.items():
        expected = parse_poly(text, fam.ring)
        got = solved.get(name)
        if got is None:
            mismatches.append(f"{name}: free in the solver, reference {expected}")
        elif got != expected:
            mismatches.append(f"{name}: solver {got}, reference {expected}")
    for name, value in solved.items():
        if name not in ref.entries:
            mismatches.append(f"{name}: solver {value}, missing from the reference")
    if set(ref.free) != set(table.free):
        mismatches.append(f"free names: solver {sorted(table.free)}, reference {sorted(ref.free)}")
    extra = [str(c) for c in table.side_conditions]
    verdict = "fail" if mismatches else ("warning" if extra else "pass")
    return ComparisonReport(kind="table", verdict=verdict, mismatches=mismatches,
                            extra_conditions=extra, notes=list(ref.notes))


def _compare_relations(fam: ASFamily, ref: ASReferenceDoc, table: SolvedTable) -> ComparisonReport:
    solved = table.bindings()
    point, _ = generic_point(table.side_conditions)
    statuses = []
    used: set[int] = set()
    for text in ref.relations:
        relation = parse_poly(text, fam.ring).substitute(solved)
        if not relation:
            status = "implied"
        else:
            hits = [k for k, c in enumerate(table.side_conditions) if c.is_proportional(relation)]
            if hits:
                status = "matched"
                used.update(hits)
            elif not relation.substitute(point):
                status = "derived"
            else:
                status = "unmatched"
        statuses.append(RelationStatus(relation=text, status=status))
    extra = [str(c) for k, c in enumerate(table.side_conditions) if k not in used]
    mismatches = [f"{s.relation} does not follow from the solver's table" for s in statuses if s.status == "unmatched"]
    verdict = "fail" if mismatches else ("warning" if extra else "pass")
    return ComparisonReport(kind="relations", verdict=verdict, mismatches=mismatches, relations=statuses,
                            extra_conditions=extra, notes=list(ref.notes))


def compare_with_reference(tag: str, table: SolvedTable, fam: Optional[ASFamily] = None) -> ComparisonReport:
    fam = fam or family_data(tag)
    ref = load_references().tables.get(tag)
    if ref is None:
        return ComparisonReport(kind="table", verdict="warning", notes=[f"no reference table for {tag}"])
    if ref.kind == "table":
        return _compare_table(fam, ref, table)
    return _compare_relations(fam, ref, table)


# ---------- specialization ----------

def specialize(fam: ASFamily, table: SolvedTable, values: dict) -> DeformationData:
    """A numeric deformation: every symbolic family parameter must be given, free names default to 0."""
    scalars = {name: parse_scalar(v, fam.field) for name, v in values.items()}
    missing = set(fam.parameters) - set(scalars)
    if missing:
        raise InputError(f"values needed for the family parameters {sorted(missing)}", path="values")
    unknown = set(scalars) - set(fam.parameters) - set(table.free)
    if unknown:
        raise InputError(f"{sorted(unknown)} are neither family parameters nor free names", path="values")
    env = {**{name: 0 for name in table.free}, **scalars}
    for c in table.side_conditions:
        if c.evaluate(env):
            raise InputError(f"the values violate the side condition {c} = 0", path="values")

    def value_of(name: str):
        if name in table.entries:
            return table.entries[name].evaluate(env)
        return env[name]

    images = {i: [{w: value_of(name) for w, name in unknown_layout(i)[rel]} for rel in RELATIONS]
              for i in range(1, DEGREE + 1)}
    relations = numeric_relations(fam, {p: env[p] for p in fam.parameters})
    return DeformationData.from_images(V_DIM, DEGREE, relations, images, field_=fam.field)


# ---------- reports ----------

def solve_family(tag: str) -> ASReport:
    fam = family_data(tag)
    table = staged_solve(fam)
    verified = verify_table(fam, table)
    comparison = compare_with_reference(tag, table, fam)
    parts = [comparison.verdict, "pass" if verified else "fail"]
    if fam.stage4_zero and table.stage4_residual:
        parts.append("fail")
    if fam.warnings:
        parts.append("warning")
    verdict = combine_verdicts(parts)
    logging.info(f"AS family {tag}: {verdict}")
    return ASReport(
        verdict=verdict, tag=tag, field=str(fam.field),
        entries={name: str(value) for name, value in sorted(table.entries.items())},
        free=table.free, side_conditions=[str(c) for c in table.side_conditions],
        solved_parameters={name: str(value) for name, value in table.solved_parameters.items()},
        stage4_residual=[str(r) for r in table.stage4_residual],
        table_verified=verified, comparison=comparison,
    )


def solve_all(tags: Iterable[str]) -> dict[str, ASReport]:
    tags = list(tags)
    with ThreadPoolExecutor(max_workers=max_threads()) as pool:
        reports = list(pool.map(solve_family, tags))
    return dict(zip(tags, reports))


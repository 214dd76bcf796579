"""
Command bodies for scripts/pbwforge.py.

Every command takes a validated JobSpec and returns (exit_code, report).
Exit codes: 0 pass (warnings included), 1 mathematical failure or a
refused construction, 2 malformed input.
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Callable, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.artinschelter import family_tags, solve_all, solve_family
from src.cli.io import data_to_document, document_to_data, load_document, read_json
from src.errors import (
    DimensionHypothesisError,
    GeneralizedJacobiError,
    InputError,
    JacobiError,
    PbwForgeError,
    TopFormError,
)
from src.models import (
    AInfReport,
    ASReport,
    CheckReport,
    ErrorReport,
    HilbertReport,
    SelftestItem,
    SelftestReport,
    WedgeReport,
    combine_verdicts,
)
from src.pbwcheck import check_J1, check_J2, hilbert, pbw_verify
from src.pbwcheck.deformation import DeformationData
from src.utils.paths import get_mocks_dir, get_reports_dir
from src.utils.settings import get_settings
from src.wedgedef import (
    EvenNData,
    OddNData,
    build_alpha_even,
    build_alpha_odd,
    dimension_gate,
    heisenberg_example,
    random_odd_data,
)
from src.yoneda import ainf_check

Command = Literal["verify", "solve-as", "build-wedge", "ainf-check", "hilbert", "selftest"]

NEEDS_INPUT = {"verify", "ainf-check", "hilbert"}
WEDGE_EXAMPLES = ("random", "heisenberg")
REFUSALS = (JacobiError, GeneralizedJacobiError, TopFormError, DimensionHypothesisError)


class JobSpec(BaseModel):
    """One CLI invocation; unset numeric options fall back to config/pbwforge_settings.json."""
    command: Command
    input: Optional[Path] = None
    out: Optional[Path] = None
    maxdeg: Optional[int] = Field(None, ge=0, le=16)
    margin: Optional[int] = Field(None, ge=0)
    degbound: Optional[int] = Field(None, ge=1)
    seed: Optional[int] = None
    family: Optional[str] = None
    field: Optional[int] = Field(None, ge=1)  # conductor override for the input document
    allow_small_v: bool = False
    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def _requirements(self) -> "JobSpec":
        if self.command in NEEDS_INPUT and self.input is None:
            raise ValueError(f"{self.command} needs an input document")
        if self.command == "solve-as":
            tags = family_tags()
            if self.family is None:
                raise ValueError(f"solve-as needs --family, one of {tags}")
            if self.family not in tags:
                raise ValueError(f"unknown family '{self.family}', expected one of {tags}")
        if self.command == "build-wedge":
            if self.input is None and self.family not in WEDGE_EXAMPLES:
                raise ValueError(f"build-wedge needs an input document or --family in {list(WEDGE_EXAMPLES)}")
        return self

    @property
    def rng_seed(self) -> int:
        return get_settings().seed if self.seed is None else self.seed

    def default_out(self) -> Path:
        stem = self.input.stem if self.input is not None else (self.family or "run")
        return get_reports_dir() / f"{self.command}-{stem}.json"


def make_job(**options) -> JobSpec:
    try:
        return JobSpec(**options)
    except ValidationError as e:
        err = e.errors()[0]
        path = ".".join(str(p) for p in err["loc"]) or None
        raise InputError(err["msg"].removeprefix("Value error, "), path=path) from None


def exit_code(verdict: str) -> int:
    return 1 if verdict == "fail" else 0


def _load(job: JobSpec) -> DeformationData:
    return document_to_data(load_document(job.input), conductor=job.field)


# ---------- commands ----------

def cmd_verify(job: JobSpec) -> tuple[int, CheckReport]:
    report = pbw_verify(_load(job), maxdeg=job.maxdeg, margin=job.margin)
    return exit_code(report.verdict), report


def cmd_solve_as(job: JobSpec) -> tuple[int, ASReport]:
    report = solve_family(job.family)
    return exit_code(report.verdict), report


def _wedge_input(job: JobSpec) -> OddNData | EvenNData:
    if job.input is None:
        if job.family == "heisenberg":
            return heisenberg_example()
        return random_odd_data(5, 3, np.random.default_rng(job.rng_seed))
    raw = read_json(job.input)
    N = raw.get("N") if isinstance(raw, dict) else None
    if not isinstance(N, int):
        raise InputError("an integer N is required", path="N")
    model = OddNData if N % 2 else EvenNData
    try:
        doc = model.model_validate(raw)
    except ValidationError as e:
        err = e.errors()[0]
        raise InputError(err["msg"], path=".".join(str(p) for p in err["loc"])) from None
    return doc


def cmd_build_wedge(job: JobSpec) -> tuple[int, WedgeReport]:
    doc = _wedge_input(job)
    if job.allow_small_v:
        doc = doc.model_copy(update={"allow_small_v": True})
    parity = "odd" if doc.N % 2 else "even"
    try:
        warnings = dimension_gate(doc.v, doc.N, doc.allow_small_v)
        data = build_alpha_odd(doc) if parity == "odd" else build_alpha_even(doc)
    except REFUSALS as e:
        logging.warning(f"Wedge construction refused: {e}")
        report = WedgeReport(verdict="fail", parity=parity, N=doc.N, v=doc.v,
                             refusal=f"{type(e).__name__}: {e}")
        return 1, report
    check = pbw_verify(data, maxdeg=job.maxdeg, margin=job.margin)
    report = WedgeReport(
        verdict=check.verdict, parity=parity, N=doc.N, v=doc.v,
        document=data_to_document(data, description=f"wedge^{doc.N} V deformation, v = {doc.v}"),
        check=check, warnings=warnings,
    )
    return exit_code(report.verdict), report


def cmd_ainf_check(job: JobSpec) -> tuple[int, AInfReport]:
    report = ainf_check(_load(job), degbound=job.degbound)
    return exit_code(report.verdict), report


def cmd_hilbert(job: JobSpec) -> tuple[int, HilbertReport]:
    data = _load(job)
    if data.symbolic:
        raise InputError("hilbert needs numeric alpha; this document has free parameters", path="parameters")
    report = hilbert(data, maxdeg=job.maxdeg, margin=job.margin)
    return exit_code(report.verdict), report


# ---------- selftest ----------

def _mock(name: str) -> Path:
    return get_mocks_dir() / "algebras" / f"{name}.json"


def _mock_data(name: str) -> DeformationData:
    return document_to_data(load_document(_mock(name)))


def _selftest_checks(job: JobSpec) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    def verify(name: str, expected: str, maxdeg: int = 4):
        def run():
            report = pbw_verify(_mock_data(name), maxdeg=maxdeg)
            return report.verdict == expected, f"verdict {report.verdict}, expected {expected}"
        return run

    def counterexample():
        report = pbw_verify(_mock_data("counterexample"), maxdeg=4)
        ok = (report.J1.verdict == "pass" and report.J2.verdict == "pass"
              and report.dims is not None and report.dims.first_failure == 3)
        return ok, f"J1 {report.J1.verdict}, J2 {report.J2.verdict}, dims fail at {report.dims.first_failure if report.dims else None}"

    def type_e_hilbert():
        report = hilbert(_mock_data("type_e_undeformed"), maxdeg=5)
        return report.rows["A"] == [1, 2, 4, 6, 9, 12], f"A row {report.rows['A']}"

    def as_families():
        reports = solve_all(family_tags())
        failed = [tag for tag, r in reports.items() if r.verdict == "fail"]
        return not failed, f"failed: {failed}" if failed else f"{len(reports)} families solved"

    def random_wedge():
        data = build_alpha_odd(random_odd_data(5, 3, np.random.default_rng(job.rng_seed)))
        report = pbw_verify(data, maxdeg=3, margin=1)
        return report.verdict == "pass", f"verdict {report.verdict}"

    def heisenberg():
        data = build_alpha_even(heisenberg_example())
        j1 = check_J1(data)
        levels = check_J2(data, j1)
        ok = j1.passed and all(level.passed for level in levels)
        return ok, "J1 and J2 hold" if ok else "J1 or J2 fails"

    def non_jacobi():
        doc = EvenNData.model_validate(read_json(_mock("wedge_even_nonjacobi")))
        try:
            build_alpha_even(doc)
        except JacobiError as e:
            return True, f"refused: {e}"
        return False, "built without refusal"

    def ainf_undeformed():
        report = ainf_check(_mock_data("type_e_undeformed"), degbound=6)
        return report.verdict == "pass", f"verdict {report.verdict}"

    return [
        ("verify so3", verify("so3", "pass")),
        ("verify sl2", verify("sl2", "pass")),
        ("verify clifford", verify("clifford", "pass")),
        ("verify failing bracket", verify("failing_bracket", "fail", maxdeg=3)),
        ("counterexample fails in dims", counterexample),
        ("type E Hilbert row", type_e_hilbert),
        ("Artin-Schelter families", as_families),
        ("random odd wedge deformation", random_wedge),
        ("Heisenberg wedge deformation", heisenberg),
        ("non-Jacobi bracket refused", non_jacobi),
        ("A-infinity undeformed type E", ainf_undeformed),
    ]


def cmd_selftest(job: JobSpec) -> tuple[int, SelftestReport]:
    items = []
    for name, check in _selftest_checks(job):
        try:
            ok, detail = check()
        except PbwForgeError as e:
            ok, detail = False, f"{type(e).__name__}: {e}"
        logging.info(f"selftest {name}: {'pass' if ok else 'fail'} ({detail})")
        items.append(SelftestItem(name=name, verdict="pass" if ok else "fail", detail=detail))
    report = SelftestReport(verdict=combine_verdicts([i.verdict for i in items]), items=items)
    return exit_code(report.verdict), report


COMMANDS: dict[str, Callable[[JobSpec], tuple[int, BaseModel]]] = {
    "verify": cmd_verify,
    "solve-as": cmd_solve_as,
    "build-wedge": cmd_build_wedge,
    "ainf-check": cmd_ainf_check,
    "hilbert": cmd_hilbert,
    "selftest": cmd_selftest,
}


def run_job(job: JobSpec) -> tuple[int, BaseModel]:
    """Run one job; errors become an ErrorReport instead of propagating."""
    try:
        return COMMANDS[job.command](job)
    except InputError as e:
        logging.error(f"{job.command}: {e}")
        return 2, ErrorReport(command=job.command, kind="input", error=str(e),
                              error_type=type(e).__name__, path=e.path)
    except PbwForgeError as e:
        logging.error(f"{job.command}: {e}")
        return 1, ErrorReport(command=job.command, kind="math", error=str(e), error_type=type(e).__name__)

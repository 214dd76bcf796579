# models.py
"""
Input documents and JSON reports for pbwforge.
Scalars and polynomials travel as strings ("1/2 + 3/2*z^2", "gamma*z/(1+z)").
"""
from __future__ import annotations
from typing import Dict, List, Literal, Optional, Union
from pydantic import BaseModel, Field, ConfigDict, field_validator

Verdict = Literal["pass", "fail", "warning"]
Scalar = Union[str, int]


def combine_verdicts(verdicts: List[str]) -> Verdict:
    """fail beats warning beats pass."""
    if "fail" in verdicts:
        return "fail"
    if "warning" in verdicts:
        return "warning"
    return "pass"


# ---------- Input documents ----------

class FieldDoc(BaseModel):
    conductor: int = Field(1, ge=1)  # 1 (or 2) is Q, n >= 3 is Q(zeta_n)
    model_config = ConfigDict(extra="forbid")


class AlphaDoc(BaseModel):
    """Row j lists the coefficients of alpha_i(r_j) over all words of length N - degree_drop."""
    degree_drop: int = Field(ge=1)
    matrix: List[List[Scalar]]
    model_config = ConfigDict(extra="forbid")


class DeformationDocument(BaseModel):
    """One algebra U = T(V)/(P); shared by verify, ainf-check and hilbert."""
    field: FieldDoc = Field(default_factory=FieldDoc)
    v: int = Field(ge=1, le=26)
    N: int = Field(ge=2)
    relations: List[List[List[Scalar]]]  # [[word, coeff], ...] per relation
    alpha: List[AlphaDoc] = Field(default_factory=list)
    parameters: List[str] = Field(default_factory=list)  # free symbols in alpha coefficients
    description: Optional[str] = None
    model_config = ConfigDict(extra="forbid")

    @field_validator("relations")
    @classmethod
    def _pairs(cls, v: List[List[List[Scalar]]]) -> List[List[List[Scalar]]]:
        if not v:
            raise ValueError("at least one relation is required")
        for rel in v:
            for pair in rel:
                if len(pair) != 2:
                    raise ValueError("each term must be [word, coefficient]")
        return v

    @field_validator("parameters")
    @classmethod
    def _names(cls, v: List[str]) -> List[str]:
        for name in v:
            if not name.isidentifier() or name == "z":
                raise ValueError(f"'{name}' is not a usable parameter name")
        if len(set(v)) != len(v):
            raise ValueError("duplicate parameter names")
        return v


# ---------- PBW check reports ----------

class J1Section(BaseModel):
    verdict: Verdict
    coordinates: List[List[str]]  # R-coordinates of [1, alpha_1](w_j), one list per overlap vector
    residuals: List[List[List[str]]]  # parts outside R as [word, coeff] pairs
    equations: List[str] = Field(default_factory=list)  # symbolic mode: one per nonzero residual coefficient
    model_config = ConfigDict(extra="forbid")


class J2LevelReport(BaseModel):
    i: int
    verdict: Verdict
    residuals: List[List[List[str]]]
    model_config = ConfigDict(extra="forbid")


class J2Section(BaseModel):
    verdict: Verdict
    levels: List[J2LevelReport]
    model_config = ConfigDict(extra="forbid")


class DimsSection(BaseModel):
    verdict: Verdict
    maxdeg: int
    margin: int
    graded_A: List[int]
    cumulative_A: List[int]
    filtered_U: List[int]
    first_failure: Optional[int] = None
    stable: bool = True
    rows: Dict[str, List[int]] = Field(default_factory=dict)  # truncation degree -> U row
    model_config = ConfigDict(extra="forbid")


class CheckReport(BaseModel):
    verdict: Verdict
    N: int
    v: int
    dim_R: int
    dim_overlap: int
    symbolic: bool = False
    J1: J1Section
    J2: J2Section
    dims: Optional[DimsSection] = None
    warnings: List[str] = Field(default_factory=list)
    model_config = ConfigDict(extra="forbid")


class HilbertReport(BaseModel):
    verdict: Verdict
    maxdeg: int
    margin: int
    rows: Dict[str, List[int]]  # "A", "cumulative_A", "U"
    unstable_rows: Dict[str, List[int]] = Field(default_factory=dict)
    first_failure: Optional[int] = None
    warnings: List[str] = Field(default_factory=list)
    model_config = ConfigDict(extra="forbid")


# ---------- A-infinity reports ----------

class AxiomInstance(BaseModel):
    """One failing evaluation: the arity, insertion position (axiom 2) and arguments as dual words."""
    p: int
    position: Optional[int] = None
    args: List[str]
    residual: List[List[str]]
    model_config = ConfigDict(extra="forbid")


class AxiomLevel(BaseModel):
    p: int
    verdict: Verdict
    checked: int
    failures: List[AxiomInstance] = Field(default_factory=list)
    model_config = ConfigDict(extra="forbid")


class DescentRecord(BaseModel):
    kind: Literal["normal_form", "factorization", "differential"]
    p: int
    args: List[str]
    difference: List[List[str]]
    model_config = ConfigDict(extra="forbid")


class DictionaryEntry(BaseModel):
    """An axiom verdict on linear arguments next to the J condition it mirrors."""
    p: int
    condition: str  # "J1", "J2[i=..]" or "curvature"
    axiom_verdict: Verdict
    condition_verdict: Verdict
    agree: bool
    model_config = ConfigDict(extra="forbid")


class AInfReport(BaseModel):
    verdict: Verdict
    N: int
    degbound: int
    koszul_dual_dims: List[int]
    sign_table: Dict[str, int]
    conflicts: List[int]
    curvature: Verdict
    axiom1: List[AxiomLevel]
    axiom2: List[AxiomLevel]
    descent: List[DescentRecord] = Field(default_factory=list)
    roundtrip: Verdict
    dictionary: List[DictionaryEntry] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)
    model_config = ConfigDict(extra="forbid")


# ---------- Artin-Schelter catalog ----------

class ASFamilyDoc(BaseModel):
    """Relations f, g over x, y and w written as sum letter*relation and sum relation*letter."""
    field: FieldDoc = Field(default_factory=FieldDoc)
    parameters: List[str] = Field(default_factory=list)
    f: List[List[Scalar]]
    g: List[List[Scalar]]
    left: List[List[Scalar]]  # [letter, relation, coeff]
    right: List[List[Scalar]]  # [relation, letter, coeff]
    description: Optional[str] = None
    model_config = ConfigDict(extra="forbid")

    @field_validator("left", "right")
    @classmethod
    def _triples(cls, v: List[List[Scalar]]) -> List[List[Scalar]]:
        for term in v:
            if len(term) != 3:
                raise ValueError("each term of w must have three entries")
        return v


class ASBranchDoc(BaseModel):
    family: str
    specialization: Dict[str, Scalar] = Field(default_factory=dict)
    sample: Dict[str, Scalar] = Field(default_factory=dict)  # parameter values for the overlap check
    stage4_zero: bool = False
    description: Optional[str] = None
    model_config = ConfigDict(extra="forbid")


class ASCatalog(BaseModel):
    families: Dict[str, ASFamilyDoc]
    branches: Dict[str, ASBranchDoc]
    model_config = ConfigDict(extra="forbid")


class ASReferenceDoc(BaseModel):
    kind: Literal["table", "relations"]
    entries: Dict[str, Scalar] = Field(default_factory=dict)
    free: List[str] = Field(default_factory=list)
    relations: List[str] = Field(default_factory=list)  # each read as "expr = 0"
    notes: List[str] = Field(default_factory=list)
    model_config = ConfigDict(extra="forbid")


class ASReferenceCatalog(BaseModel):
    tables: Dict[str, ASReferenceDoc]
    model_config = ConfigDict(extra="forbid")


# ---------- Artin-Schelter reports ----------

class RelationStatus(BaseModel):
    relation: str
    status: Literal["implied", "matched", "derived", "unmatched"]
    model_config = ConfigDict(extra="forbid")


class ComparisonReport(BaseModel):
    kind: Literal["table", "relations"]
    verdict: Verdict
    mismatches: List[str] = Field(default_factory=list)
    relations: List[RelationStatus] = Field(default_factory=list)
    extra_conditions: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    model_config = ConfigDict(extra="forbid")


class ASReport(BaseModel):
    verdict: Verdict
    tag: str
    field: str
    entries: Dict[str, str]
    free: List[str]
    side_conditions: List[str]
    solved_parameters: Dict[str, str] = Field(default_factory=dict)
    stage4_residual: List[str] = Field(default_factory=list)
    table_verified: bool
    comparison: Optional[ComparisonReport] = None
    model_config = ConfigDict(extra="forbid")


# ---------- Wedge constructions ----------

class WedgeReport(BaseModel):
    verdict: Verdict
    parity: Literal["odd", "even"]
    N: int
    v: int
    document: Optional[DeformationDocument] = None  # relations and alpha matrices, readable by verify
    refusal: Optional[str] = None
    check: Optional[CheckReport] = None
    warnings: List[str] = Field(default_factory=list)
    model_config = ConfigDict(extra="forbid")


# ---------- Self test ----------

class SelftestItem(BaseModel):
    name: str
    verdict: Verdict
    detail: Optional[str] = None
    model_config = ConfigDict(extra="forbid")


class SelftestReport(BaseModel):
    verdict: Verdict
    items: List[SelftestItem]
    model_config = ConfigDict(extra="forbid")


# ---------- Errors ----------

class ErrorReport(BaseModel):
    """Written in place of a command's report when the job stops early."""
    verdict: Verdict = "fail"
    command: str
    kind: Literal["input", "math"]
    error: str
    error_type: str
    path: Optional[str] = None
    model_config = ConfigDict(extra="forbid")

from src.artinschelter.equations import EquationStage, alpha_template, bracket_w, derive_equations, unknown_layout
from src.artinschelter.families import ALL_UNKNOWNS, STAGE_UNKNOWNS, ASFamily, family_data, family_tags, load_catalog
from src.artinschelter.reference import (
    compare_with_reference,
    load_references,
    solve_all,
    solve_family,
    specialize,
)
from src.artinschelter.solver import SolvedTable, generic_point, staged_solve, verify_table

__all__ = [
    "ALL_UNKNOWNS",
    "ASFamily",
    "EquationStage",
    "STAGE_UNKNOWNS",
    "SolvedTable",
    "alpha_template",
    "bracket_w",
    "compare_with_reference",
    "derive_equations",
    "family_data",
    "family_tags",
    "generic_point",
    "load_catalog",
    "load_references",
    "solve_all",
    "solve_family",
    "specialize",
    "staged_solve",
    "unknown_layout",
    "verify_table",
]

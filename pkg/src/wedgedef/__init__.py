from src.wedgedef.construct import (
    build_alpha_even,
    build_alpha_odd,
    check_even_data,
    dimension_gate,
    even_operators,
    gen_jacobi_check,
    heisenberg_example,
    jacobi_check,
    odd_operators,
    random_odd_data,
    wedge_relations,
)
from src.wedgedef.data import EvenNData, FormDoc, OddNData, bracket_map, form_map, linear_form_map
from src.wedgedef.symmetric import clifford_deformation, symmetric_rows, verify_symmetric_relations

__all__ = [
    "EvenNData",
    "FormDoc",
    "OddNData",
    "bracket_map",
    "build_alpha_even",
    "build_alpha_odd",
    "check_even_data",
    "clifford_deformation",
    "dimension_gate",
    "even_operators",
    "form_map",
    "gen_jacobi_check",
    "heisenberg_example",
    "jacobi_check",
    "linear_form_map",
    "odd_operators",
    "random_odd_data",
    "symmetric_rows",
    "verify_symmetric_relations",
    "wedge_relations",
]

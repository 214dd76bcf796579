from src.yoneda.axioms import axiom1_residual, axiom2_residual, check_axiom_1, check_axiom_2, curvature_check
from src.yoneda.check import ainf_check
from src.yoneda.koszul_dual import YonedaAlgebra, b_to_dual_degree, build_koszul_dual
from src.yoneda.roundtrip import axiom_condition_dictionary, roundtrip_alpha, roundtrip_matches
from src.yoneda.structure import AInfStructure, build_mp_linear, extend_mp, odd_tuples, sign_conflicts, sign_table

__all__ = [
    "AInfStructure",
    "YonedaAlgebra",
    "ainf_check",
    "axiom1_residual",
    "axiom2_residual",
    "b_to_dual_degree",
    "build_koszul_dual",
    "build_mp_linear",
    "check_axiom_1",
    "check_axiom_2",
    "curvature_check",
    "axiom_condition_dictionary",
    "extend_mp",
    "odd_tuples",
    "roundtrip_alpha",
    "roundtrip_matches",
    "sign_conflicts",
    "sign_table",
]

from src.pbwcheck.conditions import J1Result, J2Level, check_J1, check_J2, overlap_space
from src.pbwcheck.deformation import DeformationData
from src.pbwcheck.dimensions import FilteredDims, filtered_dims_U, graded_dims_A
from src.pbwcheck.groebner import NCGroebner
from src.pbwcheck.verify import (
    hilbert,
    koszul_overlap_lemma_check,
    lie_deformation,
    pbw_verify,
    random_lie_bracket,
)

__all__ = [
    "DeformationData",
    "FilteredDims",
    "J1Result",
    "J2Level",
    "NCGroebner",
    "check_J1",
    "check_J2",
    "filtered_dims_U",
    "graded_dims_A",
    "hilbert",
    "koszul_overlap_lemma_check",
    "lie_deformation",
    "overlap_space",
    "pbw_verify",
    "random_lie_bracket",
]

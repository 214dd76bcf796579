from src.tensorspace.exact_sequence import ExactSequenceReport, exact_sequence_check, ideal_piece
from src.tensorspace.exterior import (
    ExteriorMap,
    alternating_word_map,
    gen_jacobi_map,
    jacobi_map,
    op_Ta,
    top_form_map,
    wedge,
)
from src.tensorspace.linmap import (
    Composite,
    LinMap,
    Operator,
    OperatorSum,
    PieceMap,
    TensorProduct,
    WordMap,
    brace,
    bracket,
    bracket_vector,
    identity_map,
    map_compose,
    map_restrict,
    map_tensor,
    operator_on_relations,
    tensor,
)
from src.tensorspace.laws import (
    LawCheck,
    even_law_check,
    image_law_check,
    injectivity_check,
    kernel_law_check,
    odd_law_check,
    ta_injective,
    ta_rank,
)
from src.tensorspace.subspace import (
    Subspace,
    alternating_row,
    antisymmetrizer,
    full_subspace,
    pair,
    perp_space,
    subspace_from_vectors,
    subspace_intersect,
    subspace_sum,
    symmetrizer,
    tensor_subspace,
    zero_subspace,
)
from src.tensorspace.underline import op_commutator, op_pm_underline, op_underline
from src.tensorspace.words import (
    GradedPiece,
    TensorElement,
    Word,
    str_to_word,
    vec_to_pairs,
    word_to_str,
)

__all__ = [
    "Composite",
    "ExactSequenceReport",
    "ExteriorMap",
    "GradedPiece",
    "LawCheck",
    "LinMap",
    "Operator",
    "OperatorSum",
    "PieceMap",
    "Subspace",
    "TensorElement",
    "TensorProduct",
    "Word",
    "WordMap",
    "alternating_row",
    "alternating_word_map",
    "antisymmetrizer",
    "brace",
    "bracket",
    "bracket_vector",
    "even_law_check",
    "exact_sequence_check",
    "full_subspace",
    "gen_jacobi_map",
    "ideal_piece",
    "identity_map",
    "image_law_check",
    "injectivity_check",
    "jacobi_map",
    "kernel_law_check",
    "map_compose",
    "map_restrict",
    "map_tensor",
    "odd_law_check",
    "op_Ta",
    "op_commutator",
    "op_pm_underline",
    "op_underline",
    "operator_on_relations",
    "pair",
    "perp_space",
    "str_to_word",
    "subspace_from_vectors",
    "subspace_intersect",
    "subspace_sum",
    "symmetrizer",
    "ta_injective",
    "ta_rank",
    "tensor",
    "tensor_subspace",
    "top_form_map",
    "vec_to_pairs",
    "wedge",
    "word_to_str",
    "zero_subspace",
]

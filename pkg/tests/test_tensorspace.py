from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb

import pytest

from src.errors import InputError, ShapeError, SizeGuardError
from src.pbwcheck import overlap_space
from src.tensorspace import (
    GradedPiece,
    TensorElement,
    WordMap,
    antisymmetrizer,
    exact_sequence_check,
    even_law_check,
    image_law_check,
    injectivity_check,
    kernel_law_check,
    odd_law_check,
    op_commutator,
    op_pm_underline,
    op_underline,
    pair,
    perp_space,
    str_to_word,
    subspace_from_vectors,
    subspace_intersect,
    subspace_sum,
    symmetrizer,
    ta_injective,
    word_to_str,
)
from src.tensorspace.words import all_words


def test_words_use_lexicographic_letters():
    assert str_to_word("xyz", 3) == (0, 1, 2)
    assert word_to_str((2, 0)) == "zx"
    assert word_to_str((0, 1), dual=True) == "XY"


def test_letter_outside_basis_is_rejected():
    with pytest.raises(InputError):
        str_to_word("xt", 3)


def test_size_guard():
    with pytest.raises(SizeGuardError):
        GradedPiece(10, 8, size_guard=1000)
    assert GradedPiece(2, 3).index((1, 0, 1)) == 5


def test_tensor_element_accumulates_repeated_words(Q):
    el = TensorElement.from_pairs([["xy", "1"], ["xy", "1/2"], ["yx", "-1"]], 2, Q)
    assert el.terms == {(0, 1): Fraction(3, 2), (1, 0): Fraction(-1)}


def test_tensor_element_rejects_mixed_degrees(Q):
    with pytest.raises(ShapeError):
        TensorElement.from_pairs([["xy", "1"], ["x", "1"]], 2, Q)


def test_exterior_and_symmetric_dimensions():
    assert antisymmetrizer(4, 2).dim == 6
    assert antisymmetrizer(5, 3).dim == 10
    assert symmetrizer(3, 2).dim == 6


def test_overlap_of_wedge_is_next_wedge():
    for v, N in [(3, 2), (4, 2), (4, 3)]:
        W = overlap_space(antisymmetrizer(v, N))
        assert W.dim == comb(v, N + 1)
        assert W.includes(antisymmetrizer(v, N + 1))


def test_perp_space_pairs_to_zero():
    R = antisymmetrizer(3, 2)
    S = perp_space(R)
    assert S.dim == 9 - 3
    for s in S.basis():
        for r in R.basis():
            assert pair(s, r) == 0


def test_subspace_coordinates_follow_input_order():
    vectors = [{(0, 1): Fraction(1), (1, 0): Fraction(-1)}, {(0, 0): Fraction(1)}]
    R = subspace_from_vectors(vectors, 2, 2, track=True)
    coords = R.coordinates({(0, 1): Fraction(2), (1, 0): Fraction(-2), (0, 0): Fraction(3)})
    assert coords == {0: Fraction(2), 1: Fraction(3)}
    assert R.coordinates({(1, 1): Fraction(1)}) is None


def random_vector(rng, v: int, degree: int, terms: int = 3) -> dict:
    words = list(all_words(v, degree))
    vec: dict = {}
    for _ in range(terms):
        w = words[int(rng.integers(0, len(words)))]
        vec[w] = vec.get(w, Fraction(0)) + int(rng.integers(-2, 3))
    return {w: c for w, c in vec.items() if c}


def test_sum_and_intersection_dimensions(rng):
    for _ in range(10):
        U = subspace_from_vectors([random_vector(rng, 3, 2) for _ in range(4)], 3, 2)
        W = subspace_from_vectors([random_vector(rng, 3, 2) for _ in range(6)], 3, 2)
        total = subspace_sum(U, W)
        common = subspace_intersect(U, W)
        assert total.dim + common.dim == U.dim + W.dim
        assert total.includes(U) and total.includes(W)
        assert U.includes(common) and W.includes(common)


def test_perp_of_antisymmetrizer_is_symmetrizer():
    S = perp_space(antisymmetrizer(3, 2))
    assert S.includes(symmetrizer(3, 2))
    assert symmetrizer(3, 2).includes(S)


# ---------- exterior algebra laws ----------

@pytest.mark.parametrize("v", [1, 2, 3, 4, 5])
def test_ta_injective_below_dimension(v):
    for a, p, r in product(range(v + 1), repeat=3):
        if a + p + r <= v:
            assert ta_injective(v, a, p, r), (v, a, p, r)


@pytest.mark.parametrize("v,p", [(2, 2), (2, 3), (3, 3)])
def test_exact_sequence_for_cyclic_relations(v, p):
    report = exact_sequence_check(v, p)
    assert report.exact
    assert report.holds


@pytest.mark.slow
@pytest.mark.parametrize("N,s,v", [(3, 2, 5), (4, 2, 6), (4, 1, 6)])
def test_form_laws(N, s, v):
    assert image_law_check(N, s, v).holds
    assert kernel_law_check(N, s, v).holds
    if (N - s) % 2:
        assert odd_law_check(N, s, v).holds


@pytest.mark.slow
def test_injectivity_and_even_law():
    assert injectivity_check(3, 2, 5).holds
    assert even_law_check(3, 1, 5).holds


def test_law_parity_is_checked():
    with pytest.raises(ShapeError):
        even_law_check(3, 2, 5)
    with pytest.raises(ShapeError):
        odd_law_check(4, 2, 6)


def test_cyclic_relations_degree_three_dimension():
    assert exact_sequence_check(3, 3).dim_A == 11


# ---------- shuffle operators ----------

def random_bracket_like(rng, v: int) -> WordMap:
    table = {}
    for w in all_words(v, 2):
        img = {(k,): Fraction(int(rng.integers(-3, 4))) for k in range(v)}
        table[w] = {k: c for k, c in img.items() if c}
    return WordMap(lambda w: table[w], 2, 1)


@pytest.mark.parametrize("v,c", [(2, 0), (2, 2), (3, 1), (4, 1), (4, 2)])
def test_commutator_of_underline_is_pm_underline(v, c, rng):
    L = random_bracket_like(rng, v)
    left = op_commutator(op_underline(L, c, 1))
    right = op_pm_underline(L, 2 * c + 1)
    assert left.shape == right.shape == (2 * c + 3, 2 * c + 2)
    for w in all_words(v, 2 * c + 3):
        lhs = {k: x for k, x in left.apply_word(w).items() if x}
        rhs = {k: x for k, x in right.apply_word(w).items() if x}
        assert lhs == rhs, w

"""
The four stages of equations for a PBW deformation of a cubic AS algebra:

    stage 1:  beta f + gamma g - [1, alpha_1](w)
    stage 2:  beta alpha_1(f) + gamma alpha_1(g) - [1, alpha_2](w)
    stage 3:  beta alpha_2(f) + gamma alpha_2(g) - [1, alpha_3](w)
    stage 4:  beta alpha_3(f) + gamma alpha_3(g)

one equation per coefficient. alpha_i has unknown coefficients (a.. on f,
b.. on g) and the bracket is evaluated through the left and right
expressions of w.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from src.exactmath.linear import add_scaled, combine
from src.artinschelter.families import DEGREE, RELATIONS, STAGE_UNKNOWNS, V_DIM, ASFamily
from src.tensorspace.words import all_words


@dataclass
class EquationStage:
    stage: int
    degree: int
    unknowns: list[str]
    equations: dict = field(default_factory=dict)  # word -> PolyElement, zero entries dropped


def unknown_layout(i: int) -> dict[str, list[tuple]]:
    """(word, unknown) pairs of alpha_i(f) and alpha_i(g), words in lex order."""
    words = list(all_words(V_DIM, DEGREE - i))
    return {rel: list(zip(words, [u for u in STAGE_UNKNOWNS[i] if u.startswith(prefix)]))
            for prefix, rel in zip("ab", RELATIONS)}


def alpha_template(fam: ASFamily, i: int) -> dict[str, dict]:
    """alpha_i(f), alpha_i(g) with unknown coefficients; alpha_0 is the inclusion and alpha_4 = 0."""
    if i == 0:
        return fam.relations
    if i > DEGREE:
        return {rel: {} for rel in RELATIONS}
    return {rel: {w: fam.ring.gen(name) for w, name in pairs} for rel, pairs in unknown_layout(i).items()}


def bracket_w(fam: ASFamily, images: dict[str, dict]) -> dict:
    """[1, alpha](w) = sum x_k alpha(rho_k) - sum alpha(lambda_k) x_k."""
    out: dict = {}
    for i, rel, c in fam.left:
        add_scaled(out, {(i,) + u: x for u, x in images[rel].items()}, c)
    for rel, i, c in fam.right:
        add_scaled(out, {u + (i,): x for u, x in images[rel].items()}, -c)
    return out


def stage_equations(fam: ASFamily, previous: dict[str, dict], current: dict[str, dict]) -> dict:
    beta, gamma = fam.ring.gen("beta"), fam.ring.gen("gamma")
    return combine([(beta, previous["f"]), (gamma, previous["g"]), (-1, bracket_w(fam, current))])


def derive_equations(fam: ASFamily) -> list[EquationStage]:
    stages = []
    for k in range(1, DEGREE + 2):
        equations = stage_equations(fam, alpha_template(fam, k - 1), alpha_template(fam, k))
        stages.append(EquationStage(stage=k, degree=DEGREE + 1 - k, unknowns=list(STAGE_UNKNOWNS.get(k, [])),
                                    equations=dict(sorted(equations.items()))))
    return stages

"""
Staged elimination of the AS deformation equations.

Each stage is solved for its own unknowns by leftmost-pivot Gauss-Jordan
elimination over rational functions in the family parameters, beta, gamma
and the unknowns left free by earlier stages. Family parameters are
treated as generic, so any nonzero expression in them is invertible.

Zero rows leave side conditions. A side condition that is linear in
beta, gamma with no unknowns in it is solved (beta first) and substituted
everywhere; the others are kept, one per proportionality class.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from src.errors import InconsistentSystemError, NonlinearityError
from src.exactmath.linear import linear_extract, solve_affine
from src.exactmath.polynomial import PolyElement
from src.artinschelter.equations import derive_equations
from src.artinschelter.families import ALL_UNKNOWNS, PARAMETERS, ASFamily

_UNKNOWN_SET = frozenset(ALL_UNKNOWNS)


@dataclass
class SolvedTable:
    tag: str
    entries: dict[str, PolyElement]
    free: list[str]
    side_conditions: list[PolyElement] = field(default_factory=list)
    stage4_residual: list[PolyElement] = field(default_factory=list)
    solved_parameters: dict[str, PolyElement] = field(default_factory=dict)

    def bindings(self) -> dict[str, PolyElement]:
        return {**self.entries, **self.solved_parameters}


class _Elimination:
    """Solved values, solved beta/gamma and kept side conditions, kept mutually substituted."""

    def __init__(self, fam: ASFamily):
        self.fam = fam
        self.values: dict[str, PolyElement] = {}
        self.parameters: dict[str, PolyElement] = {}
        self.conditions: list[tuple[int, PolyElement]] = []

    def apply(self, expr: PolyElement) -> PolyElement:
        return expr.substitute({**self.values, **self.parameters})

    def add_values(self, values: dict[str, PolyElement]) -> None:
        self.values.update(values)

    def add_condition(self, stage: int, expr: PolyElement) -> None:
        expr = self.apply(expr)
        if not expr:
            return
        used = expr.variables()
        if not used & (_UNKNOWN_SET | set(PARAMETERS)):
            # only generic family parameters, so nonzero
            raise InconsistentSystemError(stage, str(expr))
        if not used & _UNKNOWN_SET and self._solve_parameter(expr):
            return
        if any(c.is_proportional(expr) for _, c in self.conditions):
            return
        self.conditions.append((stage, expr))

    def _solve_parameter(self, expr: PolyElement) -> bool:
        names = [p for p in PARAMETERS if p in expr.variables()]
        try:
            matrix, rhs = linear_extract([expr], names)
        except NonlinearityError:
            return False
        row = matrix[0]
        for j, name in enumerate(names):
            coeff = row[j]
            if not coeff:
                continue
            value = rhs[0]
            for k, other in enumerate(names):
                if k != j and row[k]:
                    value = value - row[k] * self.fam.ring.gen(other)
            self._bind(name, value / coeff)
            return True
        return False

    def _bind(self, name: str, value: PolyElement) -> None:
        logging.info(f"{self.fam.tag}: side condition solved as {name} = {value}")
        binding = {name: value}
        self.values = {u: x.substitute(binding) for u, x in self.values.items()}
        self.parameters = {p: x.substitute(binding) for p, x in self.parameters.items()}
        self.parameters[name] = value
        kept, self.conditions = self.conditions, []
        for stage, c in kept:
            self.add_condition(stage, c)


def staged_solve(fam: ASFamily) -> SolvedTable:
    state = _Elimination(fam)
    stage4: list[PolyElement] = []
    for stage in derive_equations(fam):
        equations = [state.apply(e) for e in stage.equations.values()]
        if stage.unknowns:
            matrix, rhs = linear_extract(equations, stage.unknowns)
            solution = solve_affine(matrix, rhs, stage.unknowns)
            state.add_values(solution.values)
            residuals = solution.residuals
        else:
            residuals = [e for e in equations if e]
            stage4 = residuals
        for r in residuals:
            state.add_condition(stage.stage, r)
        logging.info(f"{fam.tag}: stage {stage.stage} leaves {len(state.conditions)} side conditions")

    stage4 = [r for r in (state.apply(x) for x in stage4) if r]
    if fam.stage4_zero and stage4:
        logging.warning(f"{fam.tag}: the stage 4 residual does not vanish: {[str(r) for r in stage4]}")
    free = [u for u in ALL_UNKNOWNS if u not in state.values] + [p for p in PARAMETERS if p not in state.parameters]
    return SolvedTable(
        tag=fam.tag, entries=dict(state.values), free=free,
        side_conditions=[c for _, c in state.conditions], stage4_residual=stage4,
        solved_parameters=dict(state.parameters),
    )


# ---------- checking a table ----------

def generic_point(conditions: list[PolyElement], order: list[str] = ALL_UNKNOWNS) -> tuple[dict, list[PolyElement]]:
    """Solve each condition for its first unknown that appears linearly with an unknown-free
    coefficient; returns the bindings and the conditions that could not be solved."""
    point: dict[str, PolyElement] = {}
    unsolved: list[PolyElement] = []
    for c in conditions:
        c = c.substitute(point)
        if not c:
            continue
        for u in order:
            if u not in c.variables():
                continue
            try:
                matrix, rhs = linear_extract([c], [u])
            except NonlinearityError:
                continue
            coeff = matrix[0][0]
            if not coeff or coeff.variables() & _UNKNOWN_SET:
                continue
            value = rhs[0] / coeff
            point = {k: x.substitute({u: value}) for k, x in point.items()}
            point[u] = value
            break
        else:
            unsolved.append(c)
    return point, unsolved


def vanishes_on_conditions(expr: PolyElement, point: dict, unsolved: list[PolyElement]) -> bool:
    if not expr:
        return True
    if not expr.substitute(point):
        return True
    return any(c.is_proportional(expr) for c in unsolved)


def verify_table(fam: ASFamily, table: SolvedTable) -> bool:
    """Every derived equation vanishes once the table and its side conditions hold."""
    bindings = table.bindings()
    point, unsolved = generic_point(table.side_conditions)
    for stage in derive_equations(fam):
        for word, eq in stage.equations.items():
            residual = eq.substitute(bindings)
            if not vanishes_on_conditions(residual, point, unsolved):
                logging.warning(f"{fam.tag}: stage {stage.stage} equation at {word} leaves {residual}")
                return False
    return True

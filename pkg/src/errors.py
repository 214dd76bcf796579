"""
Error types raised across pbwforge.

Every error is a ValueError so callers that only care about "bad input or
impossible math" can catch one thing; the CLI maps InputError to exit
code 2 and everything else to exit code 1.
"""
from __future__ import annotations

from typing import Any, Optional


class PbwForgeError(ValueError):
    """Base class for all pbwforge errors."""


# ---------- Arithmetic ----------

class FieldDivisionError(PbwForgeError, ZeroDivisionError):
    """Division by zero in a cyclotomic field or a rational function ring."""


class NonlinearityError(PbwForgeError):
    """An equation is not affine-linear in the requested unknowns."""

    def __init__(self, equation_index: int, unknown: str, equation: Any = None):
        self.equation_index = equation_index
        self.unknown = unknown
        self.equation = equation
        detail = f": {equation}" if equation is not None else ""
        super().__init__(
            f"equation {equation_index} is nonlinear in unknown '{unknown}'{detail}"
        )


# ---------- Tensor spaces ----------

class ShapeError(PbwForgeError):
    """Mismatched homes, degrees or matrix shapes."""


class SizeGuardError(PbwForgeError):
    """A graded piece would exceed the configured number of basis words."""


class SymbolicSubspaceError(PbwForgeError):
    """Subspaces are numeric; a vector with free parameters was supplied."""


class OverlapError(PbwForgeError):
    """A slice of an overlap vector does not lie in the relation space."""


# ---------- Conditions and structures ----------

class J1Error(PbwForgeError):
    """The bracket [1, alpha_1] leaves R, so d is not defined on B_2."""


class DescentError(PbwForgeError):
    """Extended A-infinity products differ between equivalent representatives."""


class JacobiError(PbwForgeError):
    """The supplied bracket fails the Jacobi identity."""


class GeneralizedJacobiError(PbwForgeError):
    """L o Phi_2r o L does not vanish for some supplied form."""

    def __init__(self, degree: int, message: str):
        self.degree = degree
        super().__init__(message)


class TopFormError(PbwForgeError):
    """The top form does not kill 1^(2n-1) (x) L on the next exterior power."""


class DimensionHypothesisError(PbwForgeError):
    """dim V is too small for the wedge construction."""


class InconsistentSystemError(PbwForgeError):
    """Staged elimination met an equation 0 = c with c a nonzero constant."""

    def __init__(self, stage: int, witness: Any):
        self.stage = stage
        self.witness = witness
        super().__init__(f"stage {stage} is inconsistent: 0 = {witness}")


# ---------- Input ----------

class InputError(PbwForgeError):
    """Malformed input document; `path` names the offending field."""

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        prefix = f"{path}: " if path else ""
        super().__init__(prefix + message)

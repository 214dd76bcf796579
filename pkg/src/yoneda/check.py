"""
The full A-infinity check of one deformation, assembled into an AInfReport.
"""
from __future__ import annotations

import logging
from typing import Optional

from src.models import AInfReport, combine_verdicts
from src.pbwcheck.deformation import DeformationData
from src.utils.settings import get_settings
from src.yoneda.axioms import check_axiom_1, check_axiom_2, curvature_check
from src.yoneda.koszul_dual import build_koszul_dual
from src.yoneda.roundtrip import axiom_condition_dictionary, roundtrip_matches
from src.yoneda.structure import build_mp_linear, extend_mp


def ainf_check(data: DeformationData, degbound: Optional[int] = None, strict: bool = False) -> AInfReport:
    degbound = get_settings().default_degbound(data.N) if degbound is None else degbound
    algebra = build_koszul_dual(data.R, degbound, data.relations)
    structure = build_mp_linear(data, algebra, strict=strict)
    warnings: list[str] = []
    if structure.conflicts:
        warnings.append(f"sigma(q) != sigma(N-q) at arities {structure.conflicts}; "
                        f"m_q uses sigma(q)")
    extend_mp(structure, degbound)
    warnings.extend(structure.skipped)
    axiom1 = check_axiom_1(structure, degbound)
    axiom2 = check_axiom_2(structure, degbound)
    curvature = "pass" if curvature_check(structure) else "fail"
    roundtrip = "pass" if roundtrip_matches(structure) else "fail"
    dictionary = axiom_condition_dictionary(structure)
    if not all(e.agree for e in dictionary):
        warnings.append("an axiom verdict on linear arguments disagrees with its J condition")
    parts = [lv.verdict for lv in axiom1 + axiom2] + [curvature, roundtrip]
    if structure.descent:
        parts.append("fail")
    if structure.skipped:
        parts.append("warning")
    verdict = combine_verdicts(parts)
    logging.info(f"A-infinity check N={data.N}, degbound={degbound}: {verdict}")
    return AInfReport(
        verdict=verdict, N=data.N, degbound=degbound, koszul_dual_dims=algebra.dual_dims(),
        sign_table={str(p): s for p, s in structure.sigma.items()}, conflicts=structure.conflicts,
        curvature=curvature, axiom1=axiom1, axiom2=axiom2, descent=structure.descent,
        roundtrip=roundtrip, dictionary=dictionary, warnings=warnings,
    )

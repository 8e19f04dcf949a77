"""Cohomology and K-theory of the hull of a substitution complex.

The hull's Cech cohomology in each degree is the stationary direct limit
of the complex's cohomology under the induced inflation map; K^0 is the
direct sum of the degree-0 and degree-2 limits and K^1 is the degree-1
limit.  K-theory is assembled only from classified limits; a presented
limit yields an explicit refusal rather than a guessed group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import CohomologyReport
from .groups import invariant_factor_chain
from .limits import Classified, DirectLimitResult, torsion_killing_limit


class UnclassifiedLimitError(ValueError):
    """K-theory cannot be combined from a presented (unclassified) limit."""


@dataclass(frozen=True)
class HullReport:
    h0: DirectLimitResult
    h1: DirectLimitResult
    h2: DirectLimitResult
    k0: DirectLimitResult | None
    k1: DirectLimitResult | None


def hull_cohomology(report: CohomologyReport) -> HullReport:
    """Direct limits of H^0, H^1, H^2 under the induced inflation maps,
    with K-theory attached when all three limits classify."""
    if not report.has_induced_maps:
        raise ValueError("hull cohomology requires substitution data (induced maps)")
    h0 = torsion_killing_limit(report.h0.group, report.g0)
    h1 = torsion_killing_limit(report.h1.group, report.g1)
    h2 = torsion_killing_limit(report.h2.group, report.g2)
    try:
        k0, k1 = k_theory(h0, h1, h2)
    except UnclassifiedLimitError:
        k0 = k1 = None
    return HullReport(h0, h1, h2, k0, k1)


def k_theory(
    h0: DirectLimitResult, h1: DirectLimitResult, h2: DirectLimitResult
) -> tuple[DirectLimitResult, DirectLimitResult]:
    """K^0 as the formal direct sum of the degree-0 and degree-2 limits,
    K^1 as the degree-1 limit."""
    for name, value in (("H0", h0), ("H1", h1), ("H2", h2)):
        if not isinstance(value, Classified):
            raise UnclassifiedLimitError(f"unclassified input: {name} is {value}")
    k0 = Classified(
        localized_factors=h0.localized_factors + h2.localized_factors,
        free_rank=h0.free_rank + h2.free_rank,
        torsion=invariant_factor_chain(h0.torsion + h2.torsion),
    )
    return k0, h1

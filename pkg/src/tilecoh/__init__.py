"""Exact integer linear algebra for cellular cohomology, stationary direct
limits, and the cohomology and K-theory of substitution tiling hulls."""

from .complexes import (
    CohomologyReport,
    Complex2D,
    SubstitutionComplex,
    Violation,
    cohomology,
    primitivity,
    validate,
)
from .groups import (
    AbelianGroup,
    CanonicalEndo,
    DescentError,
    GroupChart,
    cokernel,
    image_reduction,
    induced_endo,
    invariant_factor_chain,
    kernel_mod_image,
)
from .hull import HullReport, UnclassifiedLimitError, hull_cohomology, k_theory
from .intmat import IntMatrix, det, hstack, is_unimodular
from .limits import (
    Classified,
    DirectLimitResult,
    LimitElement,
    NoUnitEntryError,
    Presented,
    TorsionNotKilledError,
    eigen_extend,
    same_limit_class,
    stationary_limit,
    torsion_killing_limit,
    triangular_limit,
)
from .normalforms import (
    SmithDecomposition,
    characteristic_polynomial,
    hermite_normal_form,
    integer_eigen,
    inverse_unimodular,
    kernel_basis,
    smith_normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "CanonicalEndo",
    "Classified",
    "CohomologyReport",
    "Complex2D",
    "DescentError",
    "DirectLimitResult",
    "GroupChart",
    "HullReport",
    "IntMatrix",
    "LimitElement",
    "NoUnitEntryError",
    "Presented",
    "SmithDecomposition",
    "SubstitutionComplex",
    "TorsionNotKilledError",
    "UnclassifiedLimitError",
    "Violation",
    "characteristic_polynomial",
    "cohomology",
    "cokernel",
    "det",
    "eigen_extend",
    "hermite_normal_form",
    "hstack",
    "hull_cohomology",
    "image_reduction",
    "induced_endo",
    "integer_eigen",
    "invariant_factor_chain",
    "inverse_unimodular",
    "is_unimodular",
    "k_theory",
    "kernel_basis",
    "kernel_mod_image",
    "primitivity",
    "same_limit_class",
    "smith_normal_form",
    "stationary_limit",
    "torsion_killing_limit",
    "triangular_limit",
    "validate",
]

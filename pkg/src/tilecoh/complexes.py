"""Finite 2-dimensional CW-complexes with optional substitution data.

A complex carries the boundary matrices d1 (vertices x edges) and d2
(edges x faces).  Cohomology is computed from the transposed (coboundary)
matrices: H^0 is the kernel of d1^T, H^1 the kernel of d2^T modulo the
image of d1^T, and H^2 the cokernel of d2^T.  Substitution data consists
of inflation matrices on edges and faces; the inflation on vertices is
always the identity, so no matrix is stored for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groups import CanonicalEndo, GroupChart, cokernel, induced_endo, kernel_mod_image
from .intmat import IntMatrix


@dataclass(frozen=True)
class Violation:
    """One failed structural identity, with an offending column index."""

    identity: str
    column: int

    def __str__(self) -> str:
        return f"{self.identity} fails at column {self.column}"


@dataclass(frozen=True)
class Complex2D:
    vertices: int
    edges: int
    faces: int
    d1: IntMatrix
    d2: IntMatrix
    labels: tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]] | None = field(default=None)

    def __post_init__(self) -> None:
        if min(self.vertices, self.edges, self.faces) < 0:
            raise ValueError("cell counts must be nonnegative")
        if self.d1.shape != (self.vertices, self.edges):
            raise ValueError(
                f"d1 is {self.d1.rows}x{self.d1.cols}, expected {self.vertices}x{self.edges}"
            )
        if self.d2.shape != (self.edges, self.faces):
            raise ValueError(
                f"d2 is {self.d2.rows}x{self.d2.cols}, expected {self.edges}x{self.faces}"
            )

    @property
    def edge_coboundary(self) -> IntMatrix:
        """The matrix of d^0 = d1^T (edges x vertices)."""
        return self.d1.transpose()

    @property
    def face_coboundary(self) -> IntMatrix:
        """The matrix of d^1 = d2^T (faces x edges)."""
        return self.d2.transpose()

    def euler_characteristic(self) -> int:
        return self.vertices - self.edges + self.faces


@dataclass(frozen=True)
class SubstitutionComplex:
    complex2d: Complex2D
    b1: IntMatrix
    b2: IntMatrix

    def __post_init__(self) -> None:
        e, f = self.complex2d.edges, self.complex2d.faces
        if self.b1.shape != (e, e):
            raise ValueError(f"edge inflation is {self.b1.rows}x{self.b1.cols}, expected {e}x{e}")
        if self.b2.shape != (f, f):
            raise ValueError(f"face inflation is {self.b2.rows}x{self.b2.cols}, expected {f}x{f}")


@dataclass(frozen=True)
class CohomologyReport:
    h0: GroupChart
    h1: GroupChart
    h2: GroupChart
    g0: CanonicalEndo | None = None
    g1: CanonicalEndo | None = None
    g2: CanonicalEndo | None = None

    @property
    def has_induced_maps(self) -> bool:
        return self.g0 is not None and self.g1 is not None and self.g2 is not None


def validate(obj: Complex2D | SubstitutionComplex) -> list[Violation]:
    """Check every structural identity; violations are data, not failures."""
    sub = obj if isinstance(obj, SubstitutionComplex) else None
    cx = sub.complex2d if sub is not None else obj
    violations: list[Violation] = []

    boundary_square = cx.d1 @ cx.d2
    for j in range(boundary_square.cols):
        if any(boundary_square.column(j)):
            violations.append(Violation("d1 @ d2 = 0", j))
            break
    for j in range(cx.d1.cols):
        if sum(cx.d1.column(j)) != 0:
            violations.append(Violation("d1 column sums to 0", j))
            break
    if sub is not None:
        a0 = cx.edge_coboundary
        a1 = cx.face_coboundary
        fixed = sub.b1 @ a0
        for j in range(a0.cols):
            if fixed.column(j) != a0.column(j):
                violations.append(Violation("b1 @ d1^T = d1^T", j))
                break
        left = sub.b2 @ a1
        right = a1 @ sub.b1
        for j in range(a1.cols):
            if left.column(j) != right.column(j):
                violations.append(Violation("b2 @ d2^T = d2^T @ b1", j))
                break
    return violations


def cohomology(obj: Complex2D | SubstitutionComplex) -> CohomologyReport:
    """Cohomology of the complex, with induced endomorphisms when
    substitution data is present.  Validation must pass."""
    problems = validate(obj)
    if problems:
        raise ValueError(
            "complex fails validation: " + "; ".join(str(v) for v in problems)
        )
    sub = obj if isinstance(obj, SubstitutionComplex) else None
    cx = sub.complex2d if sub is not None else obj
    a0 = cx.edge_coboundary
    a1 = cx.face_coboundary
    h0 = kernel_mod_image(IntMatrix.zeros(cx.vertices, 0), a0)
    h1 = kernel_mod_image(a0, a1)
    h2 = cokernel(a1)
    if sub is None:
        return CohomologyReport(h0, h1, h2)
    g0 = induced_endo(h0, IntMatrix.identity(cx.vertices))
    g1 = induced_endo(h1, sub.b1)
    g2 = induced_endo(h2, sub.b2)
    return CohomologyReport(h0, h1, h2, g0, g1, g2)


def primitivity(b2: IntMatrix) -> tuple[bool, int | None]:
    """Whether some power of a nonnegative square matrix is entrywise
    positive, with the smallest such power.

    Powers up to the Wielandt bound (n-1)^2 + 1 are conclusive.  Only the
    pattern of positive entries matters, so powers are taken over bitmask
    rows.  The empty 0x0 matrix is vacuously primitive.
    """
    if not b2.is_square:
        raise ValueError(f"square matrix required, got {b2.rows}x{b2.cols}")
    n = b2.rows
    for i in range(n):
        for j in range(n):
            if b2.entries[i][j] < 0:
                raise ValueError(f"negative entry at ({i}, {j})")
    if n == 0:
        return True, 1
    base = [sum(1 << j for j in range(n) if b2.entries[i][j] > 0) for i in range(n)]
    full = (1 << n) - 1
    current = list(base)
    bound = (n - 1) ** 2 + 1
    for power in range(1, bound + 1):
        if all(row == full for row in current):
            return True, power
        nxt = []
        for i in range(n):
            acc = 0
            mask = current[i]
            j = 0
            while mask:
                if mask & 1:
                    acc |= base[j]
                mask >>= 1
                j += 1
            nxt.append(acc)
        current = nxt
    return False, None

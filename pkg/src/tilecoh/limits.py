"""Stationary direct limits of Z^n --A--> Z^n --A--> ... systems.

A limit is either classified -- a direct sum of localized integer rings
Z[1/d], a free part, and torsion -- or presented honestly as the system of
a nonsingular reduced matrix when classification is out of reach.  The
classification route: shrink a singular matrix onto (the saturation of)
its image, conjugate integer eigenvectors with a unit entry to the front
until the matrix is upper triangular, then read the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .groups import AbelianGroup, CanonicalEndo, image_reduction, invariant_factor_chain
from .intmat import IntMatrix, det, hstack
from .normalforms import hermite_normal_form, integer_eigen, kernel_basis


class NoUnitEntryError(ValueError):
    """Eigenvector normalization failed: no entry equals +-1."""


class TorsionNotKilledError(ValueError):
    """The torsion part of the group is provably never annihilated."""


@dataclass(frozen=True)
class Classified:
    """Direct sum of Z[1/d] factors, a free part, and torsion factors."""

    localized_factors: tuple[int, ...] = ()
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        facs = tuple(sorted(int(v) for v in self.localized_factors))
        if any(v < 2 for v in facs):
            raise ValueError("localized factors must be >= 2 (Z[1/1] is a free summand)")
        object.__setattr__(self, "localized_factors", facs)
        object.__setattr__(
            self, "torsion", AbelianGroup(tuple(self.torsion), 0).torsion
        )
        if self.free_rank < 0:
            raise ValueError("negative free rank")

    @property
    def is_trivial(self) -> bool:
        return not self.localized_factors and not self.free_rank and not self.torsion

    def __str__(self) -> str:
        parts = [f"Z[1/{v}]" for v in self.localized_factors]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{v}" for v in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Presented:
    """Unclassified limit of a nonsingular matrix: union of A^-k Z^m inside
    (Z[1/det A])^m."""

    reduced_matrix: IntMatrix

    def __post_init__(self) -> None:
        if det(self.reduced_matrix) == 0:
            raise ValueError("presented limits require a nonsingular matrix")

    def __str__(self) -> str:
        m = self.reduced_matrix
        return f"lim(A', Z^{m.rows}) with det A' = {det(m)}"


DirectLimitResult = Classified | Presented


@dataclass(frozen=True)
class LimitElement:
    """A vector placed at a stage of the stationary system."""

    stage: int
    vector: IntMatrix

    def __post_init__(self) -> None:
        if self.stage < 1:
            raise ValueError("stage must be >= 1")
        if self.vector.cols != 1:
            raise ValueError(f"expected a column vector, got {self.vector.rows}x{self.vector.cols}")


def same_limit_class(a: IntMatrix, e1: LimitElement, e2: LimitElement) -> bool:
    """Whether two placed vectors define the same element of lim(a, Z^n).

    Equivalent iff the images agree at stage max(i, j) + n: kernels of
    powers of a stabilize within n steps, so the single check is complete.
    """
    n = a.rows
    if not a.is_square:
        raise ValueError(f"stationary system needs a square matrix, got {a.rows}x{a.cols}")
    for e in (e1, e2):
        if e.vector.rows != n:
            raise ValueError(f"vector of length {e.vector.rows} in a rank-{n} system")
    m = max(e1.stage, e2.stage)
    w1 = a.pow(m - e1.stage) @ e1.vector
    w2 = a.pow(m - e2.stage) @ e2.vector
    return (a.pow(n) @ (w1 - w2)).is_zero()


def _eigen_extend_pair(a: IntMatrix, lam: int, x: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Unimodular g with (g^-1 a g) e_1 = lam e_1, returned with its inverse.

    Accepts any eigenvector with an entry +-1: the vector is sign-
    normalized and the unit coordinate is permuted to the front, which is
    a similarity and so preserves the limit.
    """
    n = a.rows
    if not a.is_square:
        raise ValueError(f"square matrix required, got {a.rows}x{a.cols}")
    if x.shape != (n, 1):
        raise ValueError(f"eigenvector shape {x.rows}x{x.cols} does not match {n}x{n} matrix")
    if a @ x != lam * x:
        raise ValueError(f"vector is not an eigenvector for eigenvalue {lam}")
    col = x.column(0)
    unit = next((i for i, v in enumerate(col) if abs(v) == 1), None)
    if unit is None:
        raise NoUnitEntryError(f"no unit entry in eigenvector {col}")
    sign = col[unit]
    y = [sign * v for v in col]
    y[0], y[unit] = y[unit], y[0]
    # g = S * (I + (y - e1) e1^T), where S swaps coordinates 0 and unit
    rows = []
    for i in range(n):
        base = [int(i == j) for j in range(n)]
        base[0] = y[i]
        rows.append(base)
    g0 = IntMatrix.from_rows(rows)
    g0_inv_rows = []
    for i in range(n):
        base = [int(i == j) for j in range(n)]
        base[0] = 2 - y[i] if i == 0 else -y[i]
        g0_inv_rows.append(base)
    g0_inv = IntMatrix.from_rows(g0_inv_rows)
    if unit != 0:
        perm = list(range(n))
        perm[0], perm[unit] = perm[unit], perm[0]
        swap = IntMatrix.from_rows(
            [[int(j == perm[i]) for j in range(n)] for i in range(n)]
        )
        return swap @ g0, g0_inv @ swap
    return g0, g0_inv


def eigen_extend(a: IntMatrix, lam: int, x: IntMatrix) -> IntMatrix:
    """Unimodular g whose conjugate g^-1 a g has first column lam * e_1."""
    g, _ = _eigen_extend_pair(a, lam, x)
    return g


def triangular_limit(u: IntMatrix) -> DirectLimitResult:
    """Limit of an upper-triangular system with nonzero diagonal.

    Exact cases: u diagonal, or every diagonal entry past the first a
    unit (then u^k D^-k is integral for all k by inspection).  Otherwise
    a bounded integrality certificate for u^k D^-k is checked; on any
    failure the result falls through to the honest Presented form.
    """
    if not u.is_square:
        raise ValueError(f"square matrix required, got {u.rows}x{u.cols}")
    if not u.is_upper_triangular():
        raise ValueError("not upper triangular")
    lams = u.diagonal_entries()
    if any(v == 0 for v in lams):
        raise ValueError("zero diagonal entry")

    def classify() -> Classified:
        return Classified(
            localized_factors=tuple(abs(v) for v in lams if abs(v) >= 2),
            free_rank=sum(1 for v in lams if abs(v) == 1),
        )

    if u.is_diagonal():
        return classify()
    if all(abs(v) == 1 for v in lams[1:]):
        return classify()
    n = u.rows
    check_bound = max(8, n * max(abs(v).bit_length() for v in lams))
    vk = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(check_bound):
        # v_{k+1} = u @ v_k @ D^-1
        nxt = [
            [
                sum(Fraction(u.entries[i][t]) * vk[t][j] for t in range(n)) / lams[j]
                for j in range(n)
            ]
            for i in range(n)
        ]
        if any(c.denominator != 1 for row in nxt for c in row):
            return Presented(u)
        vk = nxt
    return classify()


def stationary_limit(a: IntMatrix) -> DirectLimitResult:
    """Limit of Z^n --a--> Z^n --a--> ...

    Pipeline: while singular, replace a by its action on the (saturated)
    image; then conjugate integer eigenvectors with unit entries to the
    front, largest |eigenvalue| first; if the matrix becomes upper
    triangular, classify it, otherwise present the reduced matrix.
    """
    if not a.is_square:
        raise ValueError(f"stationary system needs a square matrix, got {a.rows}x{a.cols}")
    m = a
    while m.rows > 0 and det(m) == 0:
        r, fwd, bwd = image_reduction(m)
        m = fwd @ m @ bwd
    if m.rows == 0:
        return Classified()
    reduced = m
    work = m
    n = work.rows
    fixed = 0
    while fixed < n:
        block_range = range(fixed, n)
        block = work.submatrix(block_range, block_range)
        if block.is_upper_triangular():
            break
        found = None
        for lam, _vec in integer_eigen(block):
            kern = kernel_basis(block - lam * IntMatrix.identity(block.rows))
            for j in range(kern.cols):
                col = list(kern.column(j))
                g = 0
                for v in col:
                    g = gcd(g, v)
                if g > 1:
                    col = [v // g for v in col]
                if any(abs(v) == 1 for v in col):
                    found = (lam, IntMatrix.column_vector(col))
                    break
            if found:
                break
        if found is None:
            return Presented(reduced)
        lam, vec = found
        g, g_inv = _eigen_extend_pair(block, lam, vec)
        full_g = _embed(fixed, g, n)
        full_g_inv = _embed(fixed, g_inv, n)
        work = full_g_inv @ work @ full_g
        fixed += 1
    return triangular_limit(work)


def _embed(offset: int, block: IntMatrix, n: int) -> IntMatrix:
    rows = []
    for i in range(n):
        row = [int(i == j) for j in range(n)]
        if i >= offset:
            for j in range(offset, n):
                row[j] = block.entries[i - offset][j - offset]
        rows.append(row)
    return IntMatrix.from_rows(rows)


def torsion_killing_limit(group: AbelianGroup, endo: CanonicalEndo) -> DirectLimitResult:
    """Limit of group --endo--> group --endo--> ... when some power of the
    endomorphism annihilates the torsion part.

    Well-definedness already forces the free-by-torsion block to vanish,
    so once torsion dies the system interleaves with its free block M2
    and the limit is stationary_limit(M2).  The torsion images form a
    descending chain of subgroups, so the search terminates exactly:
    either the images hit zero or they stabilize (then the limit keeps
    torsion forever and the computation refuses).
    """
    if endo.group != group:
        raise ValueError(f"endomorphism acts on {endo.group}, not on {group}")
    t = len(group.torsion)
    f = group.free_rank
    mat = endo.matrix
    free_block = mat.submatrix(range(t, t + f), range(t, t + f))
    if t == 0:
        return stationary_limit(free_block)
    torsion_block = mat.submatrix(range(t), range(t))
    relations = IntMatrix.diagonal(group.torsion)

    def image_lattice(c: IntMatrix) -> IntMatrix:
        # canonical basis of the subgroup generated by the columns of c
        # inside the torsion part; trailing zero columns of the Hermite
        # form are trimmed so lattices compare by matrix equality
        h, _ = hermite_normal_form(hstack(c, relations))
        width = h.cols
        while width > 0 and all(v == 0 for v in h.column(width - 1)):
            width -= 1
        return h.submatrix(range(h.rows), range(width))

    zero_lattice = image_lattice(IntMatrix.zeros(t, 0))
    current = IntMatrix.identity(t)
    previous = image_lattice(current)
    while True:
        current = torsion_block @ current
        # entries only matter modulo each row's invariant factor
        current = IntMatrix.from_rows(
            [[v % group.torsion[i] for v in row] for i, row in enumerate(current.entries)],
            cols=t,
        )
        lattice = image_lattice(current)
        if lattice == zero_lattice:
            return stationary_limit(free_block)
        if lattice == previous:
            raise TorsionNotKilledError(
                f"torsion not eventually annihilated: images stabilize at a "
                f"nonzero subgroup of {AbelianGroup(group.torsion, 0)}"
            )
        previous = lattice
